#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "ecint/factor_split.hpp"
#include "ecint/modular.hpp"
#include "ecint/mpoly.hpp"
#include "ecint/mpoly_io.hpp"
#include "ecint/polyops.hpp"
#include "ecint/resultant.hpp"

using namespace ecint;

namespace {

MPoly P(const std::string& s) { return MPoly::parse(s); }

MPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int maxdeg,
                  int terms, long cmax) {
  std::vector<MPoly::Term> ts;
  for (int t = 0; t < terms; ++t) {
    MPoly::Term term;
    long c = static_cast<long>(rng() % (2 * cmax + 1)) - cmax;
    term.c = c;
    for (std::size_t i = 0; i < vars.size(); ++i)
      term.e[i] = static_cast<uint32_t>(rng() % (maxdeg + 1));
    ts.push_back(term);
  }
  return MPoly::from_terms(vars, ts);
}

// --- independent oracle: subresultants as Sylvester-minor determinants ---

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt denom = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        BigInt q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
        m[i][j] = q;
      }
    denom = m[k][k];
  }
  return sign < 0 ? BigInt(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// j-th subresultant of univariate integer A, B via determinant polynomials.
std::vector<BigInt> sylvester_subresultant(const std::vector<BigInt>& A,
                                           const std::vector<BigInt>& B, int j) {
  const int n = static_cast<int>(A.size()) - 1;
  const int m = static_cast<int>(B.size()) - 1;
  const int rows = (m - j) + (n - j);
  const int cols = n + m - j;  // degrees n+m-j-1 .. 0
  auto coeff = [](const std::vector<BigInt>& f, int d) {
    return (d >= 0 && d < static_cast<int>(f.size())) ? f[d] : BigInt(0);
  };
  std::vector<std::vector<BigInt>> full(rows, std::vector<BigInt>(cols));
  for (int r = 0; r < m - j; ++r) {
    int shift = m - j - 1 - r;  // row = x^shift * A
    for (int c = 0; c < cols; ++c) full[r][c] = coeff(A, (n + m - j - 1 - c) - shift);
  }
  for (int r = 0; r < n - j; ++r) {
    int shift = n - j - 1 - r;
    for (int c = 0; c < cols; ++c) full[m - j + r][c] = coeff(B, (n + m - j - 1 - c) - shift);
  }
  std::vector<BigInt> out(j + 1);
  for (int k = 0; k <= j; ++k) {
    std::vector<std::vector<BigInt>> sq(rows, std::vector<BigInt>(rows));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < rows - 1; ++c) sq[r][c] = full[r][c];
      sq[r][rows - 1] = full[r][n + m - j - 1 - k];
    }
    out[k] = bareiss_det(sq);
  }
  return out;
}

std::vector<BigInt> dense_of(const MPoly& f, const std::string& v) {
  return f.dense_univariate(v);
}

}  // namespace

TEST_CASE("BigInt decimal round-trip and canonical zero") {
  for (const char* s : {"0", "-1", "123456789012345678901234567890", "-987654321987654321"}) {
    BigInt z = bigint_from_string(s);
    CHECK(to_string(z) == s);
  }
  CHECK(bigint_from_string("-0") == 0);
  CHECK(to_string(bigint_from_string("-0")) == "0");
}

TEST_CASE("MPoly construction, ordering, parse round-trip") {
  MPoly f = P("2 x^3 delta^2\n1 x^4\n-1\n-2 x^1");
  CHECK(f.term_count() == 4);
  CHECK(f.degree_or_zero("x") == 4);
  CHECK(f.degree_or_zero("delta") == 2);
  // graded-lex descending: x^3 delta^2 (deg 5) first, then x^4, then x, then const
  auto lines = f.to_lines();
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "2 x^3 delta^2");
  CHECK(lines[1] == "1 x^4");
  CHECK(lines[2] == "-2 x^1");
  CHECK(lines[3] == "-1");
  CHECK(MPoly::parse(f.to_string()) == f);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    MPoly g = random_poly(rng, {"x", "u"}, 6, 8, 50);
    std::string rendered;
    for (auto& l : g.to_lines()) rendered += l + "\n";
    CHECK(MPoly::parse(rendered) == g);
  }
}

TEST_CASE("arith golden examples") {
  CHECK(P("1 x^1\n1") * P("1 x^1\n-1") == P("1 x^2\n-1"));
  MPoly f = P("3 x^2 u^1\n-2");
  CHECK((f * MPoly()) == MPoly());
  // F_3 assembled from its three printed terms
  MPoly F3 = P("2 x^3 delta^2") + P("1 x^4\n-1") * P("1 delta^1") + P("-2 x^1");
  CHECK(F3 == P("2 x^3 delta^2\n1 x^4 delta^1\n-1 delta^1\n-2 x^1"));
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 15; ++i) {
    MPoly a = random_poly(rng, {"x", "delta"}, 4, 5, 20);
    MPoly b = random_poly(rng, {"x", "u"}, 4, 5, 20);
    MPoly c = random_poly(rng, {"delta", "u"}, 4, 5, 20);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("pow basics") {
  CHECK(P("1 x^1\n1").pow(2) == P("1 x^2\n2 x^1\n1"));
  CHECK(P("5").pow(0) == P("1"));
}

TEST_CASE("pseudo_divrem identity and golden cases") {
  MPoly F3u = P("2 u^3 delta^2\n1 u^4 delta^1\n-1 delta^1\n-2 u^1");
  SUBCASE("f = delta^2 by F_3-shaped divisor") {
    MPoly f = P("1 delta^2");
    auto pd = pseudo_divrem(f, F3u, "delta");
    CHECK(pd.remainder.degree_or_zero("delta") <= 1);
    MPoly lc = F3u.coeff_of("delta", 2);
    CHECK(lc.pow(pd.scale_power) * f == pd.quotient * F3u + pd.remainder);
  }
  SUBCASE("f = g gives zero remainder") {
    auto pd = pseudo_divrem(F3u, F3u, "delta");
    CHECK(pd.remainder.is_zero());
  }
  SUBCASE("zero divisor rejected") {
    CHECK_THROWS(pseudo_divrem(F3u, MPoly(), "delta"));
  }
  SUBCASE("identity on random inputs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
      MPoly f = random_poly(rng, {"x", "delta"}, 5, 6, 30);
      MPoly g = random_poly(rng, {"x", "delta"}, 3, 4, 30);
      if (g.degree_or_zero("delta") < 1) continue;
      auto pd = pseudo_divrem(f, g, "delta");
      MPoly lc = g.univariate_coeffs("delta").back();
      CHECK(lc.pow(pd.scale_power) * f == pd.quotient * g + pd.remainder);
      CHECK(pd.remainder.degree_or_zero("delta") < g.degree_or_zero("delta"));
    }
  }
}

TEST_CASE("content_primitive goldens") {
  auto cp = P("6 x^2\n9 x^1").content_primitive();
  CHECK(cp.content == 3);
  CHECK(cp.sign == 1);
  CHECK(cp.primitive == P("2 x^2\n3 x^1"));
  auto cn = P("-4").content_primitive();
  CHECK(cn.content == 4);
  CHECK(cn.sign == -1);
  CHECK(cn.primitive == P("1"));
  auto cz = MPoly().content_primitive();
  CHECK(cz.content == 0);
  CHECK(cz.primitive.is_zero());
}

TEST_CASE("gcd_poly goldens and planted structure") {
  CHECK(gcd_poly(P("1 x^2\n-1"), P("1 x^1\n-1")) == P("1 x^1\n-1"));
  CHECK(gcd_poly(P("-3 x^2\n3"), MPoly()) == P("1 x^2\n-1"));
  // gcd(A*B^3, (A*B^3)') == B^2 for squarefree coprime A, B
  std::mt19937_64 rng(5);
  for (int i = 0; i < 6; ++i) {
    MPoly A = P("1 x^2\n1 x^1\n" + std::to_string(1 + (rng() % 7)));
    MPoly B = P("1 x^2\n-1 x^1\n" + std::to_string(2 + (rng() % 5)));
    if (!gcd_poly(A, B).is_constant()) continue;
    MPoly AB3 = A * B.pow(3);
    MPoly g = gcd_poly(AB3, AB3.derivative("x"));
    CHECK(g == B.pow(2).primitive_part());
    CHECK(g.degree_or_zero("x") == 2 * B.degree_or_zero("x"));
  }
  // multivariate smoke
  MPoly h = P("1 x^1 u^1\n1");
  CHECK(gcd_poly(h * P("1 x^1\n2"), h * P("1 u^2\n3")) == h);
}

TEST_CASE("resultant goldens, symmetry, common-factor detection") {
  CHECK(resultant(P("1 x^1\n-2"), P("1 x^2\n1"), "x") == P("5"));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 12; ++i) {
    MPoly f = random_poly(rng, {"x", "u"}, 3, 4, 10);
    MPoly g = random_poly(rng, {"x", "u"}, 3, 4, 10);
    if (f.degree_or_zero("x") < 1 || g.degree_or_zero("x") < 1) continue;
    MPoly rf = resultant(f, g, "x");
    MPoly rg = resultant(g, f, "x");
    long mn = static_cast<long>(f.degree_or_zero("x")) * g.degree_or_zero("x");
    CHECK(rf == ((mn & 1) ? -rg : rg));
  }
  // planted common factor => zero resultant
  MPoly c = P("1 x^2 u^1\n1 x^1\n3");
  MPoly f = c * P("1 x^1\n-1 u^1");
  MPoly g = c * P("2 x^1\n5");
  CHECK(resultant(f, g, "x").is_zero());
  CHECK_THROWS(resultant(MPoly(), g, "x"));
  CHECK_THROWS(resultant(P("3 u^2"), g, "x"));
}

TEST_CASE("subresultant chain matches Sylvester minors (oracle)") {
  std::mt19937_64 rng(1234);
  uint64_t p = modular_primes(1)[0];
  FpCtx F(p);
  int tested = 0;
  for (int trial = 0; trial < 160; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    int m = 1 + static_cast<int>(rng() % 6);
    std::vector<BigInt> A(n + 1), B(m + 1);
    for (auto& c : A) c = static_cast<long>(rng() % 21) - 10;
    for (auto& c : B) c = static_cast<long>(rng() % 21) - 10;
    if (A.back() == 0) A.back() = 3;
    if (B.back() == 0) B.back() = -2;
    // occasionally force defective chains via sparse middles
    if (trial % 3 == 0)
      for (std::size_t i = 1; i + 1 < A.size(); ++i) A[i] = 0;
    FpVec Ap(A.size()), Bp(B.size());
    for (std::size_t i = 0; i < A.size(); ++i) Ap[i] = F.to_m(mod_u64(A[i], p));
    for (std::size_t i = 0; i < B.size(); ++i) Bp[i] = F.to_m(mod_u64(B[i], p));
    auto chain = subresultant_chain(F, Ap, Bp);
    for (int j = 0; j < std::min(n, m); ++j) {
      auto oracle = sylvester_subresultant(A, B, j);
      for (int k = 0; k <= j; ++k) {
        uint64_t want = mod_u64(oracle[k], p);
        uint64_t got =
            (j < static_cast<int>(chain.size()) && k < static_cast<int>(chain[j].size()))
                ? F.from_m(chain[j][k])
                : 0;
        CHECK(got == want);
      }
    }
    // S_0 equals the resultant
    auto s0 = sylvester_subresultant(A, B, 0);
    CHECK(F.from_m(fp_resultant(F, Ap, Bp)) == mod_u64(s0[0], p));
    ++tested;
  }
  CHECK(tested == 160);
}

TEST_CASE("resultant_prs matches Sylvester oracle on exact integers") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    int m = 1 + static_cast<int>(rng() % 5);
    std::vector<BigInt> A(n + 1), B(m + 1);
    for (auto& c : A) c = static_cast<long>(rng() % 15) - 7;
    for (auto& c : B) c = static_cast<long>(rng() % 15) - 7;
    if (A.back() == 0) A.back() = 2;
    if (B.back() == 0) B.back() = 5;
    MPoly f = MPoly::from_dense_univariate("x", A);
    MPoly g = MPoly::from_dense_univariate("x", B);
    auto oracle = sylvester_subresultant(A, B, 0);
    MPoly r = resultant_prs(f, g, "x");
    CHECK(r.constant_value() == oracle[0]);
  }
}

TEST_CASE("modular and direct resultant paths agree on small bivariate inputs") {
  std::mt19937_64 rng(31337);
  int done = 0;
  for (int trial = 0; trial < 40 && done < 12; ++trial) {
    MPoly f = random_poly(rng, {"u", "v"}, 6, 9, 1000);
    MPoly g = random_poly(rng, {"u", "v"}, 6, 9, 1000);
    if (f.degree_or_zero("v") < 1 || g.degree_or_zero("v") < 1) continue;
    MPoly direct = resultant_prs(f, g, "v");
    ModularResultantRequest req;
    req.f = f;
    req.g = g;
    req.main = "v";
    req.sec = "u";
    MPoly modular = modular_resultant(req).resultant;
    CHECK(direct == modular);
    ++done;
  }
  CHECK(done == 12);
}

TEST_CASE("squarefree_decompose goldens and properties") {
  auto d1 = squarefree_decompose(P("1 x^3"));
  CHECK(d1.content == 1);
  REQUIRE(d1.factors.size() == 1);
  CHECK(d1.factors[0].first == P("1 x^1"));
  CHECK(d1.factors[0].second == 3);

  auto d2 = squarefree_decompose(P("1 x^1\n-1").pow(2) * P("1 x^1\n2"));
  REQUIRE(d2.factors.size() == 2);
  CHECK(d2.factors[0].first == P("1 x^1\n2"));
  CHECK(d2.factors[0].second == 1);
  CHECK(d2.factors[1].first == P("1 x^1\n-1"));
  CHECK(d2.factors[1].second == 2);

  std::mt19937_64 rng(51);
  for (int i = 0; i < 10; ++i) {
    MPoly f = P("1 x^2\n" + std::to_string(1 + rng() % 9)).pow(1 + rng() % 3) *
              P("1 x^1\n-" + std::to_string(1 + rng() % 9)) * BigInt(1 + rng() % 12);
    auto d = squarefree_decompose(f);
    CHECK(d.reexpand() == f);
    for (auto& [fac, mult] : d.factors) {
      CHECK(gcd_poly(fac, fac.derivative("x")).is_constant());
      (void)mult;
    }
  }
  CHECK_THROWS(squarefree_decompose(MPoly()));
}

TEST_CASE("eval_mod goldens and homomorphism") {
  MPoly f = P("1 x^2\n-1");
  auto r = eval_mod(f, {{"x", 3}}, 7);
  CHECK(r.is_residue);
  CHECK(r.residue == 1);
  std::mt19937_64 rng(4);
  uint64_t p = 1000003;
  for (int i = 0; i < 10; ++i) {
    MPoly a = random_poly(rng, {"x", "u"}, 4, 6, 100);
    MPoly b = random_poly(rng, {"x", "u"}, 4, 6, 100);
    std::map<std::string, uint64_t> pt{{"x", rng() % p}, {"u", rng() % p}};
    auto ra = eval_mod(a, pt, p).residue;
    auto rb = eval_mod(b, pt, p).residue;
    auto rab = eval_mod(a * b, pt, p).residue;
    CHECK(rab == (static_cast<unsigned __int128>(ra) * rb) % p);
    auto rsum = eval_mod(a + b, pt, p).residue;
    CHECK(rsum == (ra + rb) % p);
  }
  // partial assignment leaves a univariate image
  auto img = eval_mod(P("1 x^2 u^1\n1 x^1\n5"), {{"u", 2}}, 11);
  CHECK_FALSE(img.is_residue);
  CHECK(img.var == "x");
  CHECK(img.image == std::vector<uint64_t>{5, 1, 2});
}

TEST_CASE("substitute_rational goldens") {
  MPoly one = P("1");
  MPoly d = MPoly::variable("delta");
  CHECK(P("1 x^2").substitute_rational("x", one, d) == one);
  MPoly num = P("1 delta^2\n1") * P("1 delta^1 x^1\n-1");
  MPoly den = P("2 delta^1") * P("1 x^1\n-1 delta^1");
  CHECK(P("1 x^1").substitute_rational("x", num, den) == num);
  MPoly varfree = P("3 delta^2\n-1");
  CHECK(varfree.substitute_rational("x", num, den) == varfree);
}

TEST_CASE("exact division fuzz") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    MPoly f = random_poly(rng, {"x", "delta"}, 4, 5, 30);
    MPoly g = random_poly(rng, {"x", "delta"}, 3, 4, 30);
    if (f.is_zero() || g.is_zero()) continue;
    auto q = (f * g).divide_exact(g);
    REQUIRE(q);
    CHECK(*q == f);
  }
  CHECK_FALSE(P("1 x^2\n1").divide_exact(P("1 x^1\n-1")));
}

TEST_CASE("split_small_factors on synthetic products") {
  // x^4-1 = (x-1)(x+1)(x^2+1); the last remaining factor stays as cofactor
  auto s = split_small_factors(P("1 x^4\n-1"), "x");
  CHECK(s.factors.size() == 2);
  CHECK(s.cofactor == P("1 x^2\n1"));
  MPoly prod = s.cofactor;
  for (const auto& fac : s.factors) prod = prod * fac;
  CHECK(prod == P("1 x^4\n-1"));
  // non-monic with a known small factor times a Selmer-style irreducible
  MPoly small = P("3 x^2\n1 x^1\n-5");
  MPoly big = P("1 x^11\n-1 x^1\n-1");  // x^11 - x - 1, irreducible
  auto s2 = split_small_factors(small * big, "x");
  REQUIRE(s2.factors.size() == 2);
  CHECK(s2.factors[0] * s2.factors[1] == (small * big).primitive_part());
  // degree bound respected: nothing of degree <= 3 inside an irreducible quintic
  SplitBudget tight;
  tight.max_factor_degree = 3;
  auto s3 = split_small_factors(P("1 x^5\n-1 x^1\n-1"), "x", tight);
  CHECK(s3.factors.empty());
  CHECK(s3.cofactor == P("1 x^5\n-1 x^1\n-1"));
}

TEST_CASE("artifact format round-trip") {
  PolyArtifact a;
  a.header = {{"tool", "ecint"}, {"version", "1.0.0"}};
  a.polys = {{"F3", P("2 x^3 delta^2\n1 x^4 delta^1\n-1 delta^1\n-2 x^1")}, {"zero", MPoly()}};
  auto text = render_artifact(a);
  auto b = parse_artifact(text);
  REQUIRE(b.polys.size() == 2);
  CHECK(b.polys[0].second == a.polys[0].second);
  CHECK(b.polys[1].second.is_zero());
  CHECK(render_artifact(b) == text);
}
