// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "cytrans/singularity.hpp"
#include "cytrans/transition.hpp"
#include "cytrans/univariate.hpp"
#include "cytrans/web_graph.hpp"
#include "support.hpp"

using namespace cytrans;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

int failures = 0;

// `limit` in seconds; 0 means no runtime bound.
void criterion(int id, const char* name, double limit, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0 && secs >= limit) expect(o, false, "runtime limit " + std::to_string(limit) + " s exceeded");
  std::printf("A%d %s  %-44s %.3f s%s%s\n", id, o.ok ? "PASS" : "FAIL", name, secs, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

TransitionRecord record(const char* file) { return parse_transition(testing::data_text(file)); }

std::string row(const Fingerprint& fp) {
  std::ostringstream s;
  s << fp.b[2] << "," << fp.b[2] << "," << fp.b[3] << "," << fp.b[4] << "," << fp.chi;
  return s.str();
}

}  // namespace

int main() {
  criterion(1, "Milnor/Tyurina of the cA4 germ", 1.0, [] {
    Outcome o;
    auto m = parse_local_model(testing::data_text("ca4_germ.lm"));
    auto mu = milnor_number(m);
    auto tau = tyurina_number(m);
    expect(o, mu == 16, "mu=" + std::to_string(mu));
    expect(o, tau == 16, "tau=" + std::to_string(tau));
    // Milnor-Orlik product from weights (5,5,2,2), d = 10
    const long d = 10, w[] = {5, 5, 2, 2};
    Rational prod = 1;
    for (long wi : w) prod *= Rational(d, wi) - 1;
    expect(o, prod == Rational(long(mu)), "Milnor-Orlik oracle " + prod.get_str());
    return o;
  });

  criterion(2, "16 nodes on the quintic containing a plane", 30.0, [] {
    Outcome o;
    auto h = parse_hypersurface(testing::data_text("quintic_with_plane.hsf"));
    auto r = analyze_singular_locus(h);
    expect(o, r.point_count == 16, "points=" + std::to_string(r.point_count));
    expect(o, r.all_nodes, "not all nodes");
    expect(o, r.radical_certified, "radical not certified");
    // Bezout for the two plane quartics g = h = 0
    auto R = testing::ring({"x1", "x2"});
    auto gens = testing::Ps(R, {"1 + 2*x1^4 - x2^4", "1 - x1^4 + 3*x2^4"});
    auto q = quotient_dimension(buchberger(gens, MonomialOrder::degrevlex()));
    expect(o, q && q->first == 4 * 4, "Bezout count");
    expect(o, r.multiplicity_total == 4 * 4, "multiplicity=" + std::to_string(r.multiplicity_total));
    return o;
  });

  criterion(3, "splitting family: 10 nodes per point, 100 total", 60.0, [] {
    Outcome o;
    auto t = record("quintic_ca4.tr");
    auto v = verify_splitting_family(*t.witness);
    expect(o, v.verified, "not verified");
    expect(o, v.report.point_count == 10, "points=" + std::to_string(v.report.point_count));
    expect(o, v.report.all_nodes, "not all nodes");
    const long total = t.singular.count * static_cast<long>(v.report.point_count);
    expect(o, total == 100, "total=" + std::to_string(total));
    return o;
  });

  criterion(4, "invariant table and the h1 Theta warning", 1.0, [] {
    Outcome o;
    auto small = compute_table(record("quintic_ca4.tr"));
    auto conifold = compute_table(record("quintic_ca4_conifold.tr"));
    expect(o, row(small.resolution) == "17,17,36,17,0", "Qhat " + row(small.resolution));
    expect(o, row(small.singular) == "1,1,60,17,-40", "Qbar " + row(small.singular));
    expect(o, row(conifold.singular) == "1,1,120,17,-100", "Qbar_alpha " + row(conifold.singular));
    expect(o, row(small.smoothing) == "1,1,204,1,-200", "Q " + row(small.smoothing));
    expect(o, table_csv_row(small.resolution) == "Qhat,18,17,17,36,17,0", "csv");
    auto findings = consistency_check(record("quintic_ca4.tr"));
    auto warnings = std::count_if(findings.begin(), findings.end(),
                                  [](const Finding& f) { return f.severity == Finding::Severity::warning; });
    expect(o, warnings == 1 && findings.size() == 1, "findings=" + std::to_string(findings.size()));
    expect(o, !findings.empty() && findings[0].message.find("h1Θ=18 vs expected h21=17") != std::string::npos,
           "warning text");
    return o;
  });

  criterion(5, "Betti numbers across the plane conifold", 0, [] {
    Outcome o;
    auto t = record("quintic_plane.tr");
    auto table = compute_table(t);
    expect(o, table.smoothing.b[2] == 1, "b2(Yt)");
    expect(o, table.resolution.b[2] == 2, "b2(Y)");
    const long N = 16, k = 1;
    expect(o, table.resolution.b[3] == 174, "b3(Y)=" + std::to_string(table.resolution.b[3]));
    expect(o, table.resolution.b[3] == 204 - 2 * (N - k), "classical relation");
    return o;
  });

  struct VerdictCase {
    const char* file;
    Verdict::Kind kind;
    const char* rule;
  };
  const VerdictCase verdicts[] = {{"quintic_plane.tr", Verdict::Kind::simple, "R1"},
                                  {"mt_to_mq.tr", Verdict::Kind::not_simple, "R2"},
                                  {"namikawa.tr", Verdict::Kind::not_simple, "R4"},
                                  {"quintic_ca4.tr", Verdict::Kind::simple, "R5"}};
  for (const auto& c : verdicts) {
    std::string name = std::string("simplicity of ") + c.file;
    auto t = record(c.file);
    std::optional<SplittingVerification> check;
    if (t.witness) check = verify_splitting_family(*t.witness);
    criterion(6, name.c_str(), 1.0, [&] {
      Outcome o;
      auto v = decide_simplicity(t, check ? &*check : nullptr);
      expect(o, v.kind == c.kind && v.rule == c.rule, v.to_string() + " via " + v.rule);
      return o;
    });
  }

  criterion(7, "cuspidal fibres and II x II points", 0, [] {
    Outcome o;
    auto doc = parse_document(testing::data_text("weierstrass.txt"));
    auto b = UnivariatePolynomial::from_polynomial(doc.polynomials.at(0), 0);
    auto c = count_cuspidal_fibers(b);
    expect(o, b.degree() == 6, "degree");
    expect(o, c.distinct_roots == 6 && c.all_simple, "roots=" + std::to_string(c.distinct_roots));
    auto b2 = UnivariatePolynomial::from_polynomial(doc.polynomials.at(1), 0);
    expect(o, count_common_cuspidal_points(b, b2) == 6, "II x II count");
    return o;
  });

  criterion(8, "dim im lambda", 0, [] {
    Outcome o;
    expect(o, dim_image_lambda_report(record("quintic_ca4.tr")) == 1, "(17,18)");
    expect(o, dim_image_lambda_report(record("namikawa.tr")) == 0, "(3,3)");
    return o;
  });

  criterion(9, "property suites", 0, [] {
    Outcome o;
    std::mt19937_64 rng(9);
    auto R3 = testing::ring({"x", "y", "z"});
    int confluent = 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<Polynomial> gens{testing::random_poly(R3, rng, 3, 3), testing::random_poly(R3, rng, 3, 3),
                                   testing::random_poly(R3, rng, 3, 3)};
      gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); }),
                 gens.end());
      if (gens.empty()) gens.push_back(testing::P(R3, "x"));
      auto f = testing::random_poly(R3, rng, 5, 4);
      auto a = buchberger(gens, MonomialOrder::degrevlex());
      std::reverse(gens.begin(), gens.end());
      auto b = buchberger(gens, MonomialOrder::degrevlex());
      if (normal_form(f, a) == normal_form(f, b) && a.generators() == b.generators()) ++confluent;
    }
    expect(o, confluent == 100, "confluence " + std::to_string(confluent) + "/100");

    auto R4 = testing::ring({"x", "y", "z", "w"});
    std::uniform_int_distribution<unsigned> e(1, 6);
    int dims = 0;
    for (int i = 0; i < 50; ++i) {
      unsigned ex[4] = {e(rng), e(rng), e(rng), e(rng)};
      std::vector<Polynomial> gens;
      for (std::size_t v = 0; v < 4; ++v) gens.push_back(Polynomial::variable(R4, v).pow(ex[v]));
      auto q = quotient_dimension(buchberger(gens, MonomialOrder::degrevlex()));
      if (q && q->first == std::size_t(ex[0]) * ex[1] * ex[2] * ex[3]) ++dims;
    }
    expect(o, dims == 50, "monomial dimensions " + std::to_string(dims) + "/50");

    for (const char* file : {"ca4_germ.lm", "node.lm", "ca2_w3.lm", "ca4_w5.lm", "triple_point.lm",
                             "namikawa_germ.lm", "fermat_cubic_surface.lm"}) {
      const auto f = parse_local_model(testing::data_text(file)).germ();
      auto q = quasi_homogeneous_weights(f);
      if (!q) {
        expect(o, false, std::string("no weights for ") + file);
        continue;
      }
      Polynomial euler(f.ring());
      for (std::size_t i = 0; i < q->size(); ++i)
        euler += (Polynomial::variable(f.ring(), i) * partial_derivative(f, i)).scaled(f.field().from_rational((*q)[i]));
      expect(o, euler == f, std::string("Euler relation ") + file);
    }

    int rejected = 0;
    for (int i = 0; i < 100; ++i) {
      WebGraph g;
      for (const char* pi : {"trivial", "Z/2"}) {
        WebNode n;
        n.id = std::string("n_") + pi;
        n.fingerprint.b = {1, 0, 1, 204, 1, 0, 1};
        n.fingerprint.chi = -200;
        n.fingerprint.h11 = 1;
        n.fingerprint.h21 = 101;
        n.fingerprint.pi1 = pi;
        g = g.add_node(n);
      }
      const bool forward = rng() % 2;
      g = g.add_arrow({"a" + std::to_string(i), forward ? "n_trivial" : "n_Z/2", forward ? "n_Z/2" : "n_trivial",
                       "", Verdict::Kind::simple});
      auto fs = validate(g);
      if (std::any_of(fs.begin(), fs.end(), [](const Finding& f) { return f.severity == Finding::Severity::error; }))
        ++rejected;
    }
    expect(o, rejected == 100, "pi1 rejection " + std::to_string(rejected) + "/100");

    auto web = load_web(testing::data_path("example.web"));
    expect(o, parse_web(format_web(web)).structurally_equal(web), "export round trip");
    return o;
  });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
