#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "qg/cache.hpp"
#include "qg/errors.hpp"
#include "qg/rewrite.hpp"

using namespace qg;

namespace {

enum { A = 0, B = 1, C = 2, D = 3, DET = 4 };

NCPoly m(std::initializer_list<int> w, const Scalar& c = 1) { return NCPoly::monomial(make_word(w), c); }

MonomialOrder slq_order() {
  return MonomialOrder({1, 1, 1, 1}, {0, 1, 2, 3}, {{OrderRefinement::Kind::Weight, {1, 0, 0, 1}}});
}

// Quantum SL(2) at q: ab = q ba, ac = q ca, bd = q db, cd = q dc, bc = cb,
// ad - q bc = 1 = da - q^{-1} bc.
std::vector<NCPoly> slq_relations(const Scalar& q) {
  return {m({A, B}) - m({B, A}, q),  m({A, C}) - m({C, A}, q),         m({B, D}) - m({D, B}, q),
          m({C, D}) - m({D, C}, q),  m({B, C}) - m({C, B}),            m({A, D}) - m({B, C}, q) - NCPoly(1),
          m({D, A}) - m({B, C}, 1 / q) - NCPoly(1)};
}

MonomialOrder glq_order() {
  return MonomialOrder({1, 1, 1, 1, 2}, {0, 1, 2, 3, 4},
                       {{OrderRefinement::Kind::Weight, {1, 1, 1, 1, 1}},
                        {OrderRefinement::Kind::Lex, {0, 0, 0, 0, 1}},
                        {OrderRefinement::Kind::Weight, {1, 0, 0, 1, 0}}});
}

// Quantum GL(2) in the D-positive presentation with a central determinant.
std::vector<NCPoly> glq_relations(const Scalar& q) {
  const NCPoly det = m({DET});
  std::vector<NCPoly> r{m({A, C}) - m({C, A}, q),
                        m({A, D}) - m({C, B}, q) - det,
                        m({B, C}) - m({D, A}, q) + det.scaled(q),
                        m({B, D}) - m({D, B}, q),
                        m({B, A}) - m({A, B}, 1 / q),
                        m({A, D}) - m({B, C}, q) - det,
                        m({D, A}) - m({C, B}, 1 / q) - det,
                        m({D, C}) - m({C, D}, 1 / q)};
  for (int g : {A, B, C, D}) r.push_back(m({DET, g}) - m({g, DET}));
  return r;
}

}  // namespace

TEST_CASE("quantum SL(2) rule set at bound 3") {
  const auto rs = complete_truncated(slq_relations(2), slq_order(), 3);
  CHECK_FALSE(rs.unit_collapse());
  // The defining relations are not closed under overlaps: a b d = q b (a d) = q b + q^2 b^2 c
  // and a c d = q c + q^2 b c^2 appear as new weight-3 rules, and the basis is infinite.
  CHECK_FALSE(rs.complete());
  const std::vector<RewriteRule> expected{
      {make_word({B, A}), m({A, B}, Scalar(1, 2))},
      {make_word({C, A}), m({A, C}, Scalar(1, 2))},
      {make_word({C, B}), m({B, C})},
      {make_word({D, B}), m({B, D}, Scalar(1, 2))},
      {make_word({D, C}), m({C, D}, Scalar(1, 2))},
      {make_word({D, A}), NCPoly(1) + m({B, C}, Scalar(1, 2))},
      {make_word({A, D}), NCPoly(1) + m({B, C}, 2)},
      {make_word({A, B, D}), m({B}, 2) + m({B, B, C}, 4)},
      {make_word({A, C, D}), m({C}, 2) + m({B, C, C}, 4)},
  };
  REQUIRE(rs.rules().size() == expected.size());
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& r : rs.rules())
      if (r == e) found = true;
    CHECK_MESSAGE(found, "missing rule with lead of length " << e.lead.size());
  }
  CHECK(rs.normal_form(m({A, D})) == NCPoly(1) + m({B, C}, 2));
  CHECK(enumerate_normal_words(rs, 2).size() == 14);
  CHECK(enumerate_normal_words(rs, 0) == std::vector<Word>{Word()});
}

TEST_CASE("quantum SL(2) normal word counts match the classical filtration") {
  const auto rs = complete_truncated(slq_relations(2), slq_order(), 5);
  // dim of the degree <= N filtration of k[SL2]: C(N+4,4) - C(N+2,4).
  auto c4 = [](int k) { return k * (k - 1) * (k - 2) * (k - 3) / 24; };
  for (int n = 0; n <= 5; ++n) {
    const int expected = c4(n + 4) - c4(n + 2);
    CHECK(enumerate_normal_words(rs, n).size() == static_cast<std::size_t>(expected));
  }
}

TEST_CASE("quantum GL(2) rules and membership") {
  const auto rs = complete_truncated(glq_relations(2), glq_order(), 4);
  bool has_cb = false;
  for (const auto& r : rs.rules())
    if (r.lead == make_word({C, B})) has_cb = true;
  CHECK(has_cb);
  CHECK(ideal_member(m({A, D}) - m({B, C}, 2) - m({DET}), rs) == Membership::Yes);
  CHECK(ideal_member(m({A}) - NCPoly(1), rs) == Membership::No);
  CHECK(ideal_member(m({DET, A}) - m({A, DET}), rs) == Membership::Yes);
  NCPoly big;
  big.add_term(Word(20, static_cast<char>(A)), 1);
  const auto rs8 = complete_truncated(glq_relations(2), glq_order(), 4);
  CHECK(ideal_member(big, rs8) != Membership::No);
  const auto w2 = enumerate_normal_words(rs, 2);
  std::vector<Word> expected{Word(),           make_word({A}),    make_word({B}),    make_word({C}),
                             make_word({D}),   make_word({A, A}), make_word({A, B}), make_word({A, C}),
                             make_word({B, B}), make_word({B, C}), make_word({B, D}), make_word({C, C}),
                             make_word({C, D}), make_word({D, D}), make_word({DET})};
  CHECK(w2.size() == expected.size());
  for (const auto& w : expected) CHECK(std::find(w2.begin(), w2.end(), w) != w2.end());
}

TEST_CASE("uncertified membership and degree guard") {
  const auto rs = complete_truncated(glq_relations(2), glq_order(), 3);
  NCPoly big;
  big.add_term(Word(20, static_cast<char>(A)), 1);
  if (!rs.complete()) {
    CHECK(ideal_member(big, rs) == Membership::Uncertified);
    CHECK_THROWS_AS(rs.normal_form(big), Error);
  }
}

TEST_CASE("rewrite invariants on the completed systems") {
  std::mt19937_64 rng(5);
  for (int which = 0; which < 2; ++which) {
    const auto rels = which == 0 ? slq_relations(2) : glq_relations(2);
    const auto ord = which == 0 ? slq_order() : glq_order();
    const auto rs = complete_truncated(rels, ord, 5);
    for (const auto& r : rels) CHECK(rs.normal_form(r).is_zero());
    CHECK(verify_confluence(rs, 5).failures.empty());
    std::uniform_int_distribution<int> g(0, which == 0 ? 3 : 4), len(0, 2), coef(-3, 3);
    auto rand_poly = [&] {
      NCPoly p;
      for (int t = 0; t < 3; ++t) {
        Word w;
        for (int i = len(rng); i > 0; --i) w += letter(g(rng));
        p.add_term(w, coef(rng));
      }
      return p;
    };
    for (int t = 0; t < 50; ++t) {
      const NCPoly p = rand_poly(), q = rand_poly();
      const NCPoly np = rs.normal_form(p);
      CHECK(rs.normal_form(np) == np);
      if (rs.certifies(p * q)) CHECK(rs.normal_form(p * q) == rs.normal_form(np * rs.normal_form(q)));
    }
  }
}

TEST_CASE("collapse and nonzero witness") {
  const MonomialOrder one({1}, {0});
  const auto x1 = complete_truncated({m({0}) - NCPoly(1)}, one, 2);
  CHECK_FALSE(x1.unit_collapse());
  CHECK(nonzero_witness(x1) == 2);
  const auto unit = complete_truncated({NCPoly(1)}, one, 2);
  CHECK(unit.unit_collapse());
  try {
    nonzero_witness(unit);
    FAIL("expected UnitCollapse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnitCollapse);
  }
  const auto gl = complete_truncated(glq_relations(2), glq_order(), 4);
  CHECK(nonzero_witness(gl) == 4);
}

TEST_CASE("completion is deterministic and the cache round-trips") {
  const auto dir = std::filesystem::temp_directory_path() / "qg_cache_test";
  std::filesystem::remove_all(dir);
  const auto rels = glq_relations(2);
  const auto rs1 = complete_truncated(rels, glq_order(), 4);
  const auto rs2 = complete_truncated(rels, glq_order(), 4);
  const std::string key = cache_key(rels, glq_order(), 4);
  CHECK(serialize_system(rs1, key) == serialize_system(rs2, key));

  const auto back = cache_roundtrip(rs1, dir);
  CHECK(back.rules() == rs1.rules());
  CHECK(back.certified_degree() == rs1.certified_degree());
  for (const auto& w : enumerate_normal_words(rs1, 3)) {
    const NCPoly probe = NCPoly::monomial(w) * m({D, A});
    if (rs1.certifies(probe)) CHECK(back.normal_form(probe) == rs1.normal_form(probe));
  }

  bool hit = true;
  complete_cached(rels, glq_order(), 4, dir, &hit);
  CHECK_FALSE(hit);
  const auto cached = complete_cached(rels, glq_order(), 4, dir, &hit);
  CHECK(hit);
  CHECK(cached.rules() == rs1.rules());

  const auto file = save_cache(rs1, key, dir);
  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  std::string tampered = text;
  const auto pos = tampered.find("\"1/2\"");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 5, "\"1/3\"");
  try {
    deserialize_system(tampered);
    FAIL("expected CacheCorrupt");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CacheCorrupt);
  }
  std::string old = text;
  const auto vpos = old.find("\"version\": 2");
  REQUIRE(vpos != std::string::npos);
  old.replace(vpos, 12, "\"version\": 1");
  try {
    deserialize_system(old);
    FAIL("expected VersionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VersionMismatch);
  }
  std::filesystem::remove_all(dir);
}
