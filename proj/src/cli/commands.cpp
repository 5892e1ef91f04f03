#include "cheb/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "cheb/analytic_bounds.hpp"
#include "cheb/arith.hpp"
#include "cheb/bqf.hpp"
#include "cheb/cli/output.hpp"
#include "cheb/dirichlet_ap.hpp"
#include "cheb/elliptic.hpp"
#include "cheb/explicit_formula.hpp"
#include "cheb/parallel.hpp"
#include "cheb/quad_chebotarev.hpp"
#include "cheb/sieve.hpp"
#include "cheb/weights.hpp"

namespace cheb::cli {
namespace {

template <class T>
std::vector<T> parse_list(const std::string& text, const std::string& what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v{};
    require(static_cast<bool>(is >> v) && (is >> std::ws).eof(), "bad " + what + " entry '" + item + "'");
    out.push_back(v);
  }
  require(!out.empty(), what + " must not be empty");
  return out;
}

std::vector<std::uint64_t> checkpoint_list(const std::string& text, std::uint64_t x) {
  if (text.empty()) return {x};
  auto cps = parse_list<std::uint64_t>(text, "checkpoint");
  if (cps.back() != x) cps.push_back(x);
  return cps;
}

ConjClass parse_class(const std::string& text) {
  if (text == "split") return ConjClass::split();
  if (text == "inert") return ConjClass::inert();
  const auto v = parse_list<std::int64_t>(text, "class");
  require(v.size() == 1 && v[0] >= 0, "class must be split, inert or a residue");
  return ConjClass{v[0]};
}

std::string class_name(const AbelianExtension& ext, const ConjClass& cls) {
  if (ext.kind() == AbelianExtension::Kind::quadratic) return cls.element == 1 ? "split" : "inert";
  return std::to_string(cls.element);
}

Cell log_cell(const LogValue& v) { return v.value; }

// Options shared by every subcommand.
struct Common {
  std::string format = "json";
  unsigned threads = 0;
  std::uint64_t memory_budget = 0;
  std::string config;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads (default: CHEB_THREADS or all cores)");
  sub->add_option("--memory-budget", c.memory_budget, "Per-request memory budget in bytes (default 2 GiB)");
  sub->add_option("--config", c.config, "Flat 'key = value' file; explicit flags take precedence");
}

using Handler = std::function<Table()>;

// ---------------------------------------------------------------- weights-verify
struct WeightsOpts {
  double x = 0, eps = 0;
  int ell = 0;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::string z;
  std::optional<double> t;
};

void add_weights(CLI::App& app, WeightsOpts& o, Common& c, std::map<CLI::App*, Handler>& handlers) {
  auto* sub = app.add_subcommand("weights-verify", "Weight f, its Laplace transform F and bounds on F");
  add_common(sub, c);
  sub->add_option("--x", o.x, "Scale x >= 3")->required();
  sub->add_option("--ell", o.ell, "Smoothing order ell >= 1")->required();
  sub->add_option("--eps", o.eps, "Width eps in (0, 1/4)")->required();
  sub->add_option("--samples", o.samples, "Random points per bound")->capture_default_str();
  sub->add_option("--seed", o.seed, "Sampler seed")->capture_default_str();
  sub->add_option("--z", o.z, "Evaluate F at re,im instead of the bound sweep");
  sub->add_option("--t", o.t, "Evaluate f(t) instead of the bound sweep");
  handlers[sub] = [&o] {
    const WeightSpec spec(o.x, o.ell, o.eps);
    Table t{"weights-verify", {}, {}};
    if (!o.z.empty()) {
      const auto v = parse_list<double>(o.z, "z");
      require(v.size() == 2, "--z expects re,im");
      const Complex F = laplace_F(spec, {v[0], v[1]});
      t.columns = {"z_re", "z_im", "F_re", "F_im"};
      t.add_row({v[0], v[1], F.real(), F.imag()});
      return t;
    }
    if (o.t) {
      t.columns = {"t", "f"};
      t.add_row({*o.t, weight_f(spec, *o.t)});
      return t;
    }
    require(o.samples >= 1, "--samples must be positive");
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> sig(1e-3, 3.0), height(-200.0, 200.0), unit(0.0, 1.0);
    t.columns = {"check", "samples", "violations", "max_ratio"};
    struct Tally {
      std::uint64_t n = 0, bad = 0;
      double worst = 0.0;
      void add(const BoundReport& r) {
        ++n;
        bad += !r.pass;
        worst = std::max(worst, r.lhs / r.rhs);
      }
    };
    Tally f0, iv, v, vreal, vi;
    f0.add(verify_F0(spec));
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Complex s(sig(rng), height(rng));
      iv.add(verify_bound_iv(spec, s, unit(rng) * spec.ell()));
      v.add(verify_bound_v(spec, s));
      vreal.add(verify_bound_v_real(spec, sig(rng)));
      vi.add(verify_bound_vi(spec, height(rng)));
    }
    const std::pair<const char*, Tally*> all[] = {
        {"F0", &f0}, {"bound_iv", &iv}, {"bound_v", &v}, {"bound_v_real", &vreal}, {"bound_vi", &vi}};
    for (const auto& [name, tally] : all) t.add_row({std::string(name), tally->n, tally->bad, tally->worst});
    return t;
  };
}

// ---------------------------------------------------------------- bounds
struct BoundsOpts {
  std::string op;
  int n_K = 1;
  double D_K = 1, Q = 1, delta0 = bounds::kDefaultDelta0;
  std::uint64_t degree_LK = 1;
  std::string ramified;
  std::optional<double> L;
  double sigma = 0.5, T = 1, constant = 1, lambda = 0, lambda1 = 0.5, eta = bounds::kDefaultEta;
  double beta1 = 0.999, c1 = bounds::kDefaultC1, theta = 0.5, mu = 0;
  bool clamp = false;
};

bounds::FieldInvariants invariants(const BoundsOpts& o) {
  bounds::FieldInvariants inv;
  inv.n_K = o.n_K;
  inv.D_K = o.D_K;
  inv.Q = o.Q;
  inv.degree_LK = o.degree_LK;
  inv.delta0 = o.delta0;
  if (!o.ramified.empty()) inv.ramified_primes = parse_list<std::uint64_t>(o.ramified, "ramified prime");
  inv.validate();
  return inv;
}

void add_bounds(CLI::App& app, BoundsOpts& o, Common& c, std::map<CLI::App*, Handler>& handlers) {
  auto* sub = app.add_subcommand("bounds", "Closed-form analytic quantities and x-range thresholds");
  add_common(sub, c);
  sub->add_option("--op", o.op, "Quantity to evaluate")
      ->required()
      ->check(CLI::IsMember({"script_L", "degree", "density", "low_lying", "repulsion", "dh", "C_theta",
                             "range", "zero"}));
  sub->add_option("--nK", o.n_K, "Degree n_K")->capture_default_str();
  sub->add_option("--DK", o.D_K, "Absolute discriminant D_K")->capture_default_str();
  sub->add_option("--Q", o.Q, "Maximal conductor norm")->capture_default_str();
  sub->add_option("--degree-LK", o.degree_LK, "[L:K]")->capture_default_str();
  sub->add_option("--ramified", o.ramified, "Comma-separated ramified rational primes");
  sub->add_option("--delta0", o.delta0, "delta_0 in (0, 0.01]")->capture_default_str();
  sub->add_option("--L", o.L, "Use this value of L instead of computing it from the invariants");
  sub->add_option("--sigma", o.sigma, "sigma for the density bound")->capture_default_str();
  sub->add_option("--T", o.T, "Height T >= 1")->capture_default_str();
  sub->add_option("--constant", o.constant, "Implied-constant multiplier")->capture_default_str();
  sub->add_option("--lambda", o.lambda, "lambda for the low-lying count and zero point")->capture_default_str();
  sub->add_flag("--clamp", o.clamp, "Clamp the low-lying count with N(0.0875) <= 1, N(0.2866) <= 2");
  sub->add_option("--lambda1", o.lambda1, "lambda_1 of the first zero")->capture_default_str();
  sub->add_option("--eta", o.eta, "eta")->capture_default_str();
  sub->add_option("--beta1", o.beta1, "beta_1 of the exceptional zero")->capture_default_str();
  sub->add_option("--c1", o.c1, "Constant c_1 of the exclusion region")->capture_default_str();
  sub->add_option("--theta", o.theta, "theta in (0, 1)")->capture_default_str();
  sub->add_option("--mu", o.mu, "mu of the zero point")->capture_default_str();
  handlers[sub] = [&o] {
    Table t{"bounds", {}, {}};
    auto script_l = [&] { return o.L ? *o.L : bounds::script_L(invariants(o)).value; };
    if (o.op == "script_L") {
      const auto r = bounds::script_L(invariants(o));
      t.columns = {"L", "case", "outside_regime"};
      t.add_row({r.value,
                 std::string(r.which == bounds::ScriptLCase::degree_dominated ? "degree" : "discriminant"),
                 r.outside_regime});
    } else if (o.op == "degree") {
      const auto r = bounds::character_group_bound(script_l());
      t.columns = {"L", "log_degree_LK", "degree_LK", "log_degree_L", "degree_L"};
      t.add_row({script_l(), r.degree_LK.log_value, log_cell(r.degree_LK), r.degree_L.log_value,
                 log_cell(r.degree_L)});
    } else if (o.op == "density") {
      const auto r = bounds::density_bound(script_l(), o.n_K, o.sigma, o.T, o.constant);
      t.columns = {"L", "sigma", "T", "log_bound", "bound"};
      t.add_row({script_l(), o.sigma, o.T, r.log_value, log_cell(r)});
    } else if (o.op == "low_lying") {
      const auto r = bounds::low_lying_density_bound(o.lambda, o.clamp);
      t.columns = {"lambda", "clamped", "log_bound", "bound"};
      t.add_row({o.lambda, o.clamp, r.log_value, log_cell(r)});
    } else if (o.op == "repulsion") {
      const auto r = bounds::repulsion_threshold(o.lambda1, o.eta);
      const char* names[] = {"zero_free_region", "siegel_zero", "log_repulsion"};
      t.columns = {"lambda1", "eta", "threshold", "branch"};
      t.add_row({o.lambda1, o.eta, r.value, std::string(names[static_cast<int>(r.branch)])});
    } else if (o.op == "dh") {
      const double L = script_l();
      t.columns = {"L", "beta1", "T", "c1", "boundary"};
      t.add_row({L, o.beta1, o.T, o.c1, bounds::deuring_heilbronn_exclusion(L, o.n_K, o.beta1, o.T, o.c1)});
    } else if (o.op == "C_theta") {
      t.columns = {"theta", "C"};
      t.add_row({o.theta, bounds::classical_C_theta(o.theta)});
    } else if (o.op == "range") {
      const auto r = bounds::range_thresholds(invariants(o), o.constant);
      t.columns = {"M", "log_upper", "log_upper_alt", "log_sharp", "log_degree", "upper", "upper_alt", "sharp", "degree"};
      t.add_row({r.M, r.upper.log_value, r.upper_alt.log_value, r.sharp.log_value, r.degree.log_value,
                 log_cell(r.upper), log_cell(r.upper_alt), log_cell(r.sharp), log_cell(r.degree)});
    } else {
      const double L = script_l();
      const bounds::ZeroPoint z{o.lambda, o.mu, false, 1};
      t.columns = {"L", "lambda", "mu", "beta", "gamma", "in_low_lying_set"};
      t.add_row({L, o.lambda, o.mu, z.beta(L), z.gamma(L), z.in_low_lying_set(L, o.eta)});
    }
    return t;
  };
}

// ---------------------------------------------------------------- pi-ap
struct PiApOpts {
  std::uint64_t q = 1, a = 1, x = 0;
  std::string checkpoints;
  std::optional<std::uint64_t> list_from;
};

void add_pi_ap(CLI::App& app, PiApOpts& o, Common& c, std::map<CLI::App*, Handler>& handlers) {
  auto* sub = app.add_subcommand("pi-ap", "Primes in an arithmetic progression");
  add_common(sub, c);
  sub->add_option("--q", o.q, "Modulus q >= 1")->required();
  sub->add_option("--a", o.a, "Residue coprime to q")->required();
  sub->add_option("--x", o.x, "Upper limit")->required();
  sub->add_option("--checkpoints", o.checkpoints, "Comma-separated x values (x is appended)");
  sub->add_option("--list-from", o.list_from, "List the primes in [LO, x] instead of counting");
  handlers[sub] = [&o] {
    Table t{"pi-ap", {}, {}};
    if (o.list_from) {
      require(*o.list_from >= 2 && *o.list_from <= o.x, "--list-from must lie in [2, x]");
      t.columns = {"p"};
      for (const auto p : segmented_primes(*o.list_from, o.x + 1).primes) {
        if (o.q == 1 || p % o.q == o.a % o.q) t.add_row({p});
      }
      return t;
    }
    t.columns = {"q", "a", "x", "count", "li_over_phi"};
    const double phi = static_cast<double>(arith::euler_phi(o.q));
    for (const auto x : checkpoint_list(o.checkpoints, o.x)) {
      const APQuery query{o.q, o.a, x};
      const double main = x >= 2 ? li(static_cast<double>(x)) / phi : 0.0;
      t.add_row({o.q, o.a, x, pi_ap(query), main});
    }
    return t;
  };
}

// ---------------------------------------------------------------- bt-check
struct BtOpts {
  std::uint64_t q = 2, x = 0;
  std::optional<std::uint64_t> a;
  std::string kind = "both";
  double slack = kDefaultSlack;
};

void add_bt(CLI::App& app, BtOpts& o, Common& c, std::map<CLI::App*, Handler>& handlers) {
  auto* sub = app.add_subcommand("bt-check", "Brun-Titchmarsh inequalities for primes in progressions");
  add_common(sub, c);
  sub->add_option("--q", o.q, "Modulus q >= 2")->required();
  sub->add_option("--a", o.a, "Residue (default: every residue coprime to q)");
  sub->add_option("--x", o.x, "Upper limit x > q")->required();
  sub->add_option("--kind", o.kind, "mv, maynard or both")
      ->check(CLI::IsMember({"mv", "maynard", "both"}))
      ->capture_default_str();
  sub->add_option("--slack", o.slack, "Stand-in for the o(1) term")->capture_default_str();
  handlers[sub] = [&o] {
    Table t{"bt-check", {"check", "q", "a", "x", "count", "rhs", "margin", "pass", "heuristic"}, {}};
    require(o.q >= 2 && o.x > o.q, "bt-check needs q >= 2 and x > q");
    std::vector<std::uint64_t> residues;
    if (o.a) {
      residues.push_back(*o.a % o.q);
    } else {
      for (std::uint64_t r = 1; r < o.q; ++r) {
        if (arith::gcd(r, o.q) == 1) residues.push_back(r);
      }
    }
    const auto table = pi_ap_table(o.q, o.x);
    for (const auto r : residues) {
      const APQuery query{o.q, r, o.x};
      query.validate();
      auto emit_row = [&](const char* name, const BoundReport& b) {
        t.add_row({std::string(name), o.q, r, o.x, table[r], b.rhs, b.margin, b.pass, b.heuristic});
      };
      if (o.kind != "maynard") emit_row("mv", mv_bound_check(query, table[r]));
      if (o.kind != "mv") emit_row("maynard", maynard_bound_check(query, table[r], o.slack));
    }
    return t;
  };
}

// ---------------------------------------------------------------- bqf
struct BqfOpts {
  std::int64_t D = 0;
  std::uint64_t x = 0;
  std::string form, checkpoints, reduce;
};

void add_bqf(CLI::App& app, BqfOpts& o, Common& c, std::map<CLI::App*, Handler>& handlers) {
  auto* sub = app.add_subcommand("bqf", "Binary quadratic forms: classes and represented primes");
  add_common(sub, c);
  sub->add_option("--D", o.D, "Discriminant is -D");
  sub->add_option("--x", o.x, "Upper limit for prime counting");
  sub->add_option("--form", o.form, "a,b,c (default: every reduced class)");
  sub->add_option("--checkpoints", o.checkpoints, "Comma-separated x values (x is appended)");
  sub->add_option("--reduce", o.reduce, "Reduce the form a,b,c and report it");
  handlers[sub] = [&o] {
    Table t{"bqf", {}, {}};
    if (!o.reduce.empty()) {
      const auto v = parse_list<std::int64_t>(o.reduce, "form");
      require(v.size() == 3, "--reduce expects a,b,c");
      const auto r = reduce_form(v[0], v[1], v[2]);
      t.columns = {"a", "b", "c", "disc", "delta_Q"};
      t.add_row({r.a, r.b, r.c, r.disc(), delta_Q(r)});
      return t;
    }
    require(o.D > 0, "--D is required and must be positive");
    const auto group = class_number(o.D);
    std::vector<ReducedForm> forms;
    if (!o.form.empty()) {
      const auto v = parse_list<std::int64_t>(o.form, "form");
      require(v.size() == 3, "--form expects a,b,c");
      const auto r = reduce_form(v[0], v[1], v[2]);
      require(r.disc() == -o.D, "--form has the wrong discriminant");
      forms.push_back(r);
    } else {
      forms = group.forms;
    }
    if (o.x == 0) {
      t.columns = {"D", "h", "form", "delta_Q"};
      for (std::size_t i = 0; i < group.forms.size(); ++i) {
        const auto& f = group.forms[i];
        t.add_row({o.D, group.h(),
                   std::to_string(f.a) + " " + std::to_string(f.b) + " " + std::to_string(f.c),
                   group.delta[i]});
      }
      return t;
    }
    require(o.x >= 3, "--x must be >= 3");
    t.columns = {"x", "count", "target", "ratio", "h", "delta_Q", "bound", "below_bound", "form"};
    const auto cps = checkpoint_list(o.checkpoints, o.x);
    for (const auto& f : forms) {
      const auto series = count_represented_primes(f, o.x, cps);
      for (std::size_t i = 0; i < series.size(); ++i) {
        const auto x = static_cast<std::uint64_t>(series.checkpoints[i]);
        require(x >= 3, "checkpoints must be >= 3");
        const auto r = corollary13_report(f, x, group, static_cast<std::uint64_t>(series.counts[i]));
        t.add_row({x, r.count, r.target, r.ratio, static_cast<std::uint64_t>(r.h), r.delta_Q, r.bound,
                   r.strict.pass,
                   std::to_string(f.a) + " " + std::to_string(f.b) + " " + std::to_string(f.c)});
      }
    }
    return t;
  };
}

// ---------------------------------------------------------------- chebotarev
struct ChebOpts {
  std::string field = "quadratic";
  std::int64_t d = -1;
  std::uint64_t q = 4;
  std::string cls = "split";
  std::string op = "theorem11";
  double x = 0, x0 = 10, constant = 1, eps = 0.1;
  int ell = 2;
  std::uint64_t p = 2;
};

AbelianExtension make_extension(const std::string& field, std::int64_t d, std::uint64_t q) {
  if (field == "quadratic") return AbelianExtension::quadratic(d);
  return AbelianExtension::cyclotomic(q);
}

void add_cheb(CLI::App& app, ChebOpts& o, Common& c, std::map<CLI::App*, Handler>& handlers) {
  auto* sub = app.add_subcommand("chebotarev", "Chebotarev counts for quadratic and cyclotomic fields");
  add_common(sub, c);
  sub->add_option("--field", o.field, "quadratic or cyclotomic")
      ->check(CLI::IsMember({"quadratic", "cyclotomic"}))
      ->capture_default_str();
  sub->add_option("--d", o.d, "Squarefree d for Q(sqrt d)")->capture_default_str();
  sub->add_option("--q", o.q, "q for Q(zeta_q)")->capture_default_str();
  sub->add_option("--class", o.cls, "split, inert, or a residue mod q")->capture_default_str();
  sub->add_option("--op", o.op, "Quantity to compute")
      ->check(CLI::IsMember({"theorem11", "pi", "psi", "lemma21", "pi-tilde", "artin", "S"}))
      ->capture_default_str();
  sub->add_option("--x", o.x, "Upper limit");
  sub->add_option("--x0", o.x0, "Lower cut x0 > 3 for lemma21 and pi-tilde")->capture_default_str();
  sub->add_option("--constant", o.constant, "Constant in the O(n_F x0) term")->capture_default_str();
  sub->add_option("--p", o.p, "Prime for --op artin")->capture_default_str();
  sub->add_option("--ell", o.ell, "Weight order for --op S")->capture_default_str();
  sub->add_option("--eps", o.eps, "Weight width for --op S")->capture_default_str();
  handlers[sub] = [&o] {
    const auto ext = make_extension(o.field, o.d, o.q);
    Table t{"chebotarev", {}, {}};
    if (o.op == "artin") {
      const auto a = artin_class(ext, o.p);
      t.columns = {"p", "class"};
      t.add_row({o.p, a ? class_name(ext, *a) : std::string("ramified")});
      return t;
    }
    const ConjClass cls = parse_class(o.cls);
    validate_class(ext, cls);
    require(o.x > 0, "--x is required");
    const std::string name = class_name(ext, cls);
    if (o.op == "theorem11") {
      const auto r = theorem11_report(ext, cls, static_cast<std::uint64_t>(o.x));
      t.columns = {"class", "x", "count", "density", "ratio", "log_threshold", "in_proven_range"};
      t.add_row({name, o.x, r.count, r.density, r.ratio, r.threshold.log_value, r.in_proven_range});
    } else if (o.op == "pi") {
      t.columns = {"class", "x", "count"};
      t.add_row({name, o.x, pi_C(ext, cls, static_cast<std::uint64_t>(o.x))});
    } else if (o.op == "psi") {
      t.columns = {"class", "x", "psi"};
      t.add_row({name, o.x, psi_C(ext, cls, o.x)});
    } else if (o.op == "lemma21") {
      const auto r = lemma21_check(ext, cls, o.x0, o.x, o.constant);
      t.columns = {"class", "x0", "x", "lhs", "rhs", "margin", "pass"};
      t.add_row({name, o.x0, o.x, r.lhs, r.rhs, r.margin, r.pass});
    } else if (o.op == "pi-tilde") {
      require(o.x > o.x0 && o.x0 > 3.0, "pi-tilde needs x > x0 > 3");
      // theta_C as a step series with a checkpoint at x0 and at every prime in (x0, x].
      CountSeries theta;
      theta.label = "theta_C";
      double acc = 0.0;
      const auto top = static_cast<std::uint64_t>(o.x);
      theta.checkpoints.push_back(o.x0);
      std::vector<std::pair<double, double>> later;
      for (const auto p : segmented_primes(2, top + 1).primes) {
        const double lp = std::log(static_cast<double>(p)) * theta_indicator(ext, cls, p, 1);
        if (static_cast<double>(p) <= o.x0) {
          acc += lp;
        } else if (lp > 0.0) {
          later.push_back({static_cast<double>(p), lp});
        }
      }
      theta.counts.push_back(acc);
      for (const auto& [p, lp] : later) {
        acc += lp;
        theta.checkpoints.push_back(p);
        theta.counts.push_back(acc);
      }
      if (theta.checkpoints.back() < o.x) {
        theta.checkpoints.push_back(o.x);
        theta.counts.push_back(acc);
      }
      t.columns = {"class", "x0", "x", "pi_tilde", "count"};
      t.add_row({name, o.x0, o.x, partial_sum_pi_from_theta(theta, o.x0, o.x), pi_C(ext, cls, top)});
    } else {
      const WeightSpec spec(o.x, o.ell, o.eps);
      t.columns = {"class", "x", "ell", "eps", "S_direct"};
      t.add_row({name, o.x, static_cast<std::int64_t>(o.ell), o.eps, S_direct(ext, cls, spec)});
    }
    return t;
  };
}

// ---------------------------------------------------------------- mellin-check
struct MellinOpts {
  std::string field = "cyclotomic";
  std::int64_t d = -1;
  std::uint64_t q = 1;
  std::string cls = "1";
  double x = 0, eps = 0.1, T_max = 500, step = kDefaultQuadStep;
  int ell = 2;
  std::uint64_t N_max = kDefaultNmax;
};

void add_mellin(CLI::App& app, MellinOpts& o, Common& c, std::map<CLI::App*, Handler>& handlers) {
  auto* sub = app.add_subcommand("mellin-check", "Contour integral of the log-derivative against S_direct");
  add_common(sub, c);
  sub->add_option("--field", o.field, "quadratic or cyclotomic")
      ->check(CLI::IsMember({"quadratic", "cyclotomic"}))
      ->capture_default_str();
  sub->add_option("--d", o.d, "Squarefree d for Q(sqrt d)")->capture_default_str();
  sub->add_option("--q", o.q, "q for Q(zeta_q); q = 1 uses zeta")->capture_default_str();
  sub->add_option("--class", o.cls, "split, inert, or a residue mod q")->capture_default_str();
  sub->add_option("--x", o.x, "Scale x >= 3")->required();
  sub->add_option("--ell", o.ell, "Weight order ell >= 2")->capture_default_str();
  sub->add_option("--eps", o.eps, "Weight width")->capture_default_str();
  sub->add_option("--T-max", o.T_max, "Truncation height >= 10")->capture_default_str();
  sub->add_option("--step", o.step, "Trapezoid step")->capture_default_str();
  sub->add_option("--N-max", o.N_max, "Dirichlet series truncation")->capture_default_str();
  handlers[sub] = [&o] {
    const auto ext = make_extension(o.field, o.d, o.q);
    const ConjClass cls = parse_class(o.cls);
    const WeightSpec spec(o.x, o.ell, o.eps);
    const auto series = SeriesCombination::for_class(ext, cls, o.N_max);
    const auto r = contour_S(series, spec, o.T_max, o.step);
    const double direct = S_direct(ext, cls, spec);
    Table t{"mellin-check",
            {"x", "ell", "eps", "T", "step", "S_direct", "S_contour", "S_contour_imag", "abs_diff", "budget",
             "within_budget", "discretization", "aliasing", "truncation", "rounding", "half_step_value",
             "half_step_ok", "tail_bound", "terms"},
            {}};
    t.add_row({o.x, static_cast<std::int64_t>(o.ell), o.eps, r.T, r.step, direct, r.value, r.imag,
               std::abs(r.value - direct), r.budget, std::abs(r.value - direct) <= r.budget, r.discretization,
               r.aliasing, r.truncation, r.rounding, r.half_step_value, r.half_step_ok, r.coarse_tail,
               static_cast<std::uint64_t>(r.terms)});
    return t;
  };
}

// ---------------------------------------------------------------- lang-trotter
struct LtOpts {
  std::optional<std::int64_t> A, B;
  std::string curves;
  std::uint64_t x = 0;
  std::string mode = "trace";
  std::int64_t a = 0;
  std::int64_t D_k = -4;
  std::string checkpoints;
  std::optional<std::uint64_t> p;
};

void add_lt(CLI::App& app, LtOpts& o, Common& c, std::map<CLI::App*, Handler>& handlers) {
  auto* sub = app.add_subcommand("lang-trotter", "Traces of Frobenius and Lang-Trotter counts");
  add_common(sub, c);
  sub->add_option("--A", o.A, "Coefficient A of y^2 = x^3 + A x + B");
  sub->add_option("--B", o.B, "Coefficient B");
  sub->add_option("--curves", o.curves, "File of 'A B [label]' lines");
  sub->add_option("--x", o.x, "Upper limit");
  sub->add_option("--mode", o.mode, "trace (pi_f), field (pi_E) or records")
      ->check(CLI::IsMember({"trace", "field", "records"}))
      ->capture_default_str();
  sub->add_option("--a", o.a, "Trace value for --mode trace")->capture_default_str();
  sub->add_option("--Dk", o.D_k, "Negative field discriminant for --mode field")->capture_default_str();
  sub->add_option("--checkpoints", o.checkpoints, "Comma-separated x values (x is appended)");
  sub->add_option("--p", o.p, "Report a_p at this prime only");
  handlers[sub] = [&o] {
    std::vector<CurveModel> curves;
    if (!o.curves.empty()) {
      std::ifstream in(o.curves);
      require(static_cast<bool>(in), "cannot open curve file " + o.curves);
      curves = read_curves(in);
    }
    if (o.A || o.B) {
      require(o.A && o.B, "--A and --B must be given together");
      CurveModel cm{*o.A, *o.B, std::nullopt, ""};
      cm.validate();
      curves.push_back(cm);
    }
    require(!curves.empty(), "give --A/--B or --curves");
    auto label = [](const CurveModel& cm) {
      return cm.label.empty() ? std::to_string(cm.A) + " " + std::to_string(cm.B) : cm.label;
    };
    Table t{"lang-trotter", {}, {}};
    if (o.p) {
      t.columns = {"curve", "p", "good", "a_p", "disc_part"};
      for (const auto& cm : curves) {
        const auto a = trace_of_frobenius(cm, *o.p);
        const std::int64_t ap = a.value_or(0);
        const std::int64_t w = ap * ap - 4 * static_cast<std::int64_t>(*o.p);
        t.add_row({label(cm), *o.p, a.has_value(), ap, a ? arith::squarefree_kernel(w) : std::int64_t{0}});
      }
      return t;
    }
    require(o.x >= 3, "--x must be >= 3");
    const auto cps = checkpoint_list(o.checkpoints, o.x);
    if (o.mode == "records") {
      t.columns = {"curve", "p", "a_p", "disc_part"};
      for (const auto& cm : curves) {
        for (const auto& r : frobenius_records(cm, o.x)) t.add_row({label(cm), r.p, r.a_p, r.disc_part});
      }
      return t;
    }
    t.columns = {"curve", "cm", "x", "count", "ratio_loglog1", "ratio_loglog2", "ratio_sqrt"};
    for (const auto& cm : curves) {
      const auto records = frobenius_records(cm, o.x);
      const bool trace = o.mode == "trace";
      const auto series = trace ? pi_f_count(records, o.a, cps) : pi_E_count(records, o.D_k, cps);
      const auto shape = lt_shape_report(series, trace ? ShapeMode::trace : ShapeMode::field, cm.has_cm());
      for (std::size_t i = 0; i < shape.checkpoints.size(); ++i) {
        t.add_row({label(cm), shape.cm, static_cast<std::uint64_t>(shape.checkpoints[i]),
                   static_cast<std::uint64_t>(shape.counts[i]), shape.ratio_loglog1[i], shape.ratio_loglog2[i],
                   shape.ratio_sqrt[i]});
      }
    }
    return t;
  };
}

// Expands "--config FILE" into flags placed right after the subcommand, so
// flags given explicitly (which come later) win under the take-last policy.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      ++i;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty() || out.empty()) return out;
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open config file " + path);
  std::vector<std::string> flags;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    require(!key.empty(), path + ":" + std::to_string(lineno) + ": empty key");
    require(key != "config", path + ":" + std::to_string(lineno) + ": nested config files are not supported");
    flags.push_back("--" + key);
    if (value != "true") flags.push_back(value);
  }
  out.insert(out.begin() + 1, flags.begin(), flags.end());
  return out;
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {"weights-verify", "Weight f, its Laplace transform F and bounds on F",
       {"laplace_F", "weight_f", "verify_bound_iv", "verify_bound_v", "verify_bound_v_real", "verify_F0",
        "verify_bound_vi"}},
      {"bounds", "Closed-form analytic quantities and x-range thresholds",
       {"script_L", "character_group_bound", "density_bound", "low_lying_density_bound", "repulsion_threshold",
        "deuring_heilbronn_exclusion", "classical_C_theta", "range_thresholds", "ZeroPoint"}},
      {"pi-ap", "Primes in an arithmetic progression", {"pi_ap", "segmented_primes", "li"}},
      {"bt-check", "Brun-Titchmarsh inequalities", {"pi_ap_table", "mv_bound_check", "maynard_bound_check"}},
      {"bqf", "Binary quadratic forms",
       {"reduce_form", "class_number", "delta_Q", "count_represented_primes", "corollary13_report"}},
      {"chebotarev", "Chebotarev counts for quadratic and cyclotomic fields",
       {"artin_class", "psi_C", "pi_C", "lemma21_check", "S_direct", "theorem11_report",
        "partial_sum_pi_from_theta"}},
      {"mellin-check", "Contour integral against the direct weighted sum",
       {"contour_S", "tail_bound", "S_direct"}},
      {"lang-trotter", "Traces of Frobenius and Lang-Trotter counts",
       {"trace_of_frobenius", "frobenius_records", "pi_f_count", "pi_E_count", "lt_shape_report"}},
  };
  return table;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  try {
    const auto args = expand_config(raw_args);

    CLI::App app{"Chebotarev and Brun-Titchmarsh toolkit", "chebtool"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    Common common;
    std::map<CLI::App*, Handler> handlers;
    WeightsOpts wo;
    BoundsOpts bo;
    PiApOpts po;
    BtOpts to;
    BqfOpts qo;
    ChebOpts co;
    MellinOpts mo;
    LtOpts lo;
    add_weights(app, wo, common, handlers);
    add_bounds(app, bo, common, handlers);
    add_pi_ap(app, po, common, handlers);
    add_bt(app, to, common, handlers);
    add_bqf(app, qo, common, handlers);
    add_cheb(app, co, common, handlers);
    add_mellin(app, mo, common, handlers);
    add_lt(app, lo, common, handlers);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::Success& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      app.exit(e, out, err);
      return 2;
    }

    if (common.threads > 0) set_thread_count(common.threads);
    if (common.memory_budget > 0) set_memory_budget_bytes(common.memory_budget);
    const Format format = parse_format(common.format);
    for (auto* sub : app.get_subcommands()) {
      const Table table = handlers.at(sub)();
      emit(table, format, out);
    }
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cheb::cli
