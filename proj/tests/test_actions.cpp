#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "jido/actions.hpp"

using namespace jido;
using G = Generator;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(JIDO_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool failing_pair(const CheckReport& r, const std::string& id) {
  for (const auto& f : r.failures)
    if (f.id == id) return true;
  return false;
}

}  // namespace

TEST_CASE("left tables satisfy the algebra relations", "[actions]") {
  auto original = verify_homomorphism(action_table(Side::left, Frame::original));
  CHECK(original.checked == 105);
  CHECK(original.ok());
  auto final_ = verify_homomorphism(authoritative_left_table(Frame::final));
  CHECK(final_.checked == 105);
  CHECK(final_.ok());
}

TEST_CASE("printed primary final table fails on the b1- and c- pairs", "[actions]") {
  auto r = verify_homomorphism(action_table(Side::left, Frame::final, Variant::primary));
  CHECK(r.failures.size() == 10);
  for (const char* id : {"b1+,b1-", "b2+,c-", "c+,b1-", "d+,b1-", "d+,c-", "b1-,c-", "b1-,d-", "b2-,c-", "b2-,d-", "c-,d-"})
    CHECK(failing_pair(r, id));
}

TEST_CASE("right tables satisfy the raising relations", "[actions]") {
  for (Frame f : {Frame::original, Frame::final}) {
    auto r = verify_homomorphism(action_table(Side::right, f));
    CHECK(r.checked == 15);
    CHECK(r.ok());
  }
  CHECK(action_table(Side::right, Frame::final).entries.size() == 6);
}

TEST_CASE("frame consistency", "[actions]") {
  CHECK(verify_frame_consistency(action_table(Side::right, Frame::original), action_table(Side::right, Frame::final)).ok());
  auto left = verify_frame_consistency(action_table(Side::left, Frame::original), authoritative_left_table(Frame::final));
  CHECK(left.checked == 15);
  CHECK(left.ok());
  auto primary = verify_frame_consistency(action_table(Side::left, Frame::original),
                                          action_table(Side::left, Frame::final, Variant::primary));
  CHECK(primary.failures.size() == 2);
}

TEST_CASE("simplified forms against the primary ones", "[actions]") {
  SimplifiedReport r = verify_simplified_forms();
  REQUIRE(r.differences.size() == 4);
  std::map<std::string, DiffOp> diff;
  for (const auto& d : r.differences) diff.emplace(d.id, d.value);
  CHECK(diff.at("b2-").is_zero());
  CHECK(diff.at("d-").is_zero());
  CHECK(diff.at("b1-") == parse_expression("-4*L1*eta1 - L1*zeta*omega", Frame::final));
  CHECK(diff.at("c-") == parse_expression("-1/2*L2*eta2*omega", Frame::final));
  CHECK_FALSE(r.primary_homomorphism.ok());
  CHECK(r.simplified_homomorphism.ok());
  REQUIRE(r.authoritative);
  CHECK(*r.authoritative == Variant::simplified);
}

TEST_CASE("covariant left-right relation", "[actions]") {
  for (Frame f : {Frame::original, Frame::final}) {
    auto r = verify_covariant_commute(authoritative_left_table(f), action_table(Side::right, f));
    CHECK(r.checked == 54);
    CHECK(r.ok());
  }
  // Raising left actions commute with every right action.
  auto lr = verify_left_right_commute(action_table(Side::left, Frame::original), action_table(Side::right, Frame::original));
  for (const auto& fail : lr.failures) CHECK_FALSE(is_raising(*parse_generator(fail.id.substr(0, fail.id.find(',')))));
}

TEST_CASE("hat right actions match the printed operators", "[actions]") {
  for (Frame f : {Frame::original, Frame::final}) {
    const std::string suffix = "_" + std::string(frame_name(f)) + ".txt";
    CHECK(serialize(hat_right_action(HatGenerator::b1, f), TextFormat::machine) == golden("hat_b1" + suffix));
    CHECK(serialize(hat_right_action(HatGenerator::b2, f), TextFormat::machine) == golden("hat_b2" + suffix));
    CHECK(serialize(hat_right_action(HatGenerator::c, f), TextFormat::machine) == golden("hat_c" + suffix));
  }
}

TEST_CASE("table dumps reload", "[actions]") {
  for (Side s : {Side::left, Side::right})
    for (Frame f : {Frame::original, Frame::final}) {
      const ActionTable& t = action_table(s, f);
      ActionTable back = load_table(dump_table(t));
      CHECK(back.entries == t.entries);
      CHECK(back.label() == t.label());
    }
}

TEST_CASE("malformed tables are rejected", "[actions]") {
  const std::string head = "side right\nframe final\nvariant primary\n";
  std::string full = head;
  for (Generator g : kRaisingGenerators) full += "[" + std::string(name(g)) + "]\nDxi1\n";
  CHECK_NOTHROW(load_table(full));
  CHECK_THROWS_AS(load_table(head + "[a1+]\nDxi1\n"), TableError);                 // incomplete
  CHECK_THROWS_AS(load_table(full + "[a1+]\nDxi2\n"), TableError);                 // duplicate
  CHECK_THROWS_AS(load_table(full + "[h1]\nDxi2\n"), TableError);                  // outside G2+
  std::string cyclic = head + "[a1+]\npi(a2+)\n[a2+]\npi(a1+)\n";
  for (Generator g : {G::b1p, G::b2p, G::cp, G::dp}) cyclic += "[" + std::string(name(g)) + "]\nDxi1\n";
  CHECK_THROWS_AS(load_table(cyclic), TableError);
}

TEST_CASE("built-in table sources", "[actions]") {
  CHECK(table_source(Side::left, Frame::final, Variant::simplified).find("[b1-]") != std::string_view::npos);
  CHECK_THROWS_AS(table_source(Side::right, Frame::final, Variant::simplified), TableError);
  CHECK(action_table(Side::left, Frame::final).label() == "left/final/primary");
  CHECK(action_table(Side::right, Frame::final).at(G::a1p) == DiffOp::derivative(Frame::final, 0));
}
