#include "trunclin/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trunclin/bounds.hpp"
#include "trunclin/data.hpp"
#include "trunclin/errors.hpp"
#include "trunclin/experiment.hpp"
#include "trunclin/growth_analysis.hpp"
#include "trunclin/random.hpp"
#include "trunclin/robust_oracle.hpp"
#include "trunclin/serialization.hpp"
#include "trunclin/sign_coding.hpp"
#include "trunclin/training.hpp"

namespace trunclin::cli {
namespace {

struct Common {
  std::size_t d = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string output;
  std::string format;
};

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size() || !std::isfinite(v)) {
      throw ValidationError(std::string("--") + what + ": malformed number '" + field + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  for (double v : parse_list(text, what)) {
    if (v < 1 || v != std::floor(v)) throw ValidationError(std::string("--") + what + ": expected positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

/// A single value is broadcast to all d coordinates.
std::vector<double> broadcast(const std::string& text, std::size_t d, const char* what) {
  auto v = parse_list(text, what);
  if (v.size() == 1) v.assign(d, v.front());
  if (v.size() != d) {
    throw DimensionMismatch(std::string("--") + what + " has " + std::to_string(v.size()) + " entries, expected " +
                            std::to_string(d));
  }
  return v;
}

TruncationConfig checked_config(std::size_t d, std::size_t k) {
  TruncationConfig cfg(d, k);
  cfg.require_positive_budget();
  return cfg;
}

void check_n(std::uint64_t n, std::size_t d) {
  if (n <= d + 1) {
    throw ValidationError("n must exceed d+1 (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
}

std::string resolve_format(const std::string& requested, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
  const std::string f = requested.empty() ? fallback : requested;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw ValidationError("--format must be one of " + list + " for this subcommand, got '" + f + "'");
}

/// Writes to --output when given, otherwise to `out`.
void emit(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (c.output.empty()) {
    body(out);
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw ValidationError("cannot open " + c.output + " for writing");
  body(file);
  if (!file) throw ValidationError("failed writing " + c.output);
}

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

std::string join(std::span<const double> v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += fmt(v[i]);
  }
  return s;
}

std::string tuple(std::span<const double> v) { return "(" + join(v, ',') + ")"; }

std::string tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string signed_str(int s) { return s > 0 ? "+1" : "-1"; }

/// Left-aligned columns separated by two spaces.
void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
}

void add_common(CLI::App* sub, Common& c, bool dk_required) {
  auto* d = sub->add_option("--d", c.d, "feature dimension");
  auto* k = sub->add_option("--k", c.k, "adversary budget (number of perturbed coordinates)");
  if (dk_required) {
    d->required();
    k->required();
  }
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--output", c.output, "write the result to this file instead of stdout");
  sub->add_option("--format", c.format, "output format: json or csv");
}

/// --d/--k are optional next to a model file but must agree with it if given.
void check_model_flags(const Common& c, const CLI::App* sub, const Model& m) {
  if (sub->count("--d") && c.d != m.d) {
    throw DimensionMismatch("--d " + std::to_string(c.d) + " does not match the model (d=" + std::to_string(m.d) + ")");
  }
  if (sub->count("--k") && c.k != m.k) {
    throw ValidationError("--k " + std::to_string(c.k) + " does not match the model (k=" + std::to_string(m.k) + ")");
  }
}

void print_train_csv(std::ostream& os, const TrainReport& r) {
  os << "restart,epoch,surrogate_loss,exact_robust_loss\n";
  for (const auto& p : r.loss_trajectory) {
    os << p.restart << ',' << p.epoch << ',' << fmt(p.surrogate_loss) << ',' << fmt(p.exact_robust_loss) << '\n';
  }
}

void print_encode_table(std::ostream& os, const CodeBasis& basis, const WeightVector& w, std::span<const double> x,
                        const SignCode& code, const std::vector<std::size_t>& order, std::size_t chosen_alpha,
                        int final_sign) {
  const auto& cfg = basis.config();
  const std::size_t d = cfg.d();
  auto masked = [&](const std::vector<int>& v) {
    std::vector<double> m(d);
    for (std::size_t i = 0; i < d; ++i) m[i] = v[i] * x[i] + 0.0;  // no -0 in the table
    return m;
  };
  auto coord = [](std::size_t i) { return "w" + std::to_string(i + 1) + "x" + std::to_string(i + 1); };

  os << "d=" << d << " k=" << cfg.k() << '\n';
  os << "x = " << tuple(x) << '\n';
  os << "w = " << tuple(w.values()) << "\n\n";

  std::vector<std::vector<std::string>> alpha{{"i", "alpha", "alpha*x", "sign", ""}};
  for (std::size_t i = 0; i < basis.alpha_count(); ++i) {
    const auto v = basis.alpha_vector(i);
    alpha.push_back({std::to_string(i + 1), tuple(v), tuple(masked(v)), signed_str(code.alpha_signs[i]),
                     i == chosen_alpha ? "<-" : ""});
  }
  print_table(os, alpha);
  os << '\n';

  std::vector<std::vector<std::string>> beta{{"i", "beta", "beta*x", "sign", "conclusion"}};
  for (std::size_t j = 0; j < basis.beta_count(); ++j) {
    const auto v = basis.beta_vector(j);
    const auto [a, b] = basis.beta_pair(j);
    const int s = code.beta_signs[j];
    beta.push_back({std::to_string(j + 1), tuple(v), tuple(masked(v)), signed_str(s),
                    coord(a) + (s < 0 ? " < " : " >= ") + coord(b)});
  }
  print_table(os, beta);
  os << '\n';

  os << "order:";
  for (std::size_t i = 0; i < order.size(); ++i) os << (i ? " <= " : " ") << coord(order[i]);
  os << '\n';
  os << "truncated sum = <w, x * alpha_" << chosen_alpha + 1 << ">\n";
  os << "sign: " << signed_str(final_sign) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated linear classifiers under sparse adversarial perturbations", "trunclin"};
  app.require_subcommand(1);

  Common c;

  // gen-data
  auto* gen = app.add_subcommand("gen-data", "sample a two-class Gaussian mixture as CSV");
  add_common(gen, c, true);
  std::uint64_t n = 0;
  std::string mu = "1", sigma = "1";
  gen->add_option("--n", n, "number of samples")->required();
  gen->add_option("--mu", mu, "class mean (one value or d comma-separated values)");
  gen->add_option("--sigma", sigma, "per-coordinate variance (one value or d values)");

  // train
  auto* tr = app.add_subcommand("train", "adversarially train a truncated linear classifier");
  add_common(tr, c, false);
  std::string data_path, report_path, model_path;
  TrainConfig tc;
  double l2_cap = 0.0;
  tr->add_option("--data", data_path, "training CSV")->required();
  tr->add_option("--report", report_path, "also write the training report (trajectory) here");
  tr->add_option("--epochs", tc.epochs, "epochs per restart");
  tr->add_option("--step", tc.initial_step, "initial step size");
  tr->add_option("--restarts", tc.restarts, "independent random restarts");
  tr->add_option("--l2-cap", l2_cap, "project w onto the l2 ball of this radius");
  tr->add_flag("--bias", tc.bias, "append a constant-1 feature");
  tr->add_option("--threads", tc.threads, "worker threads for restarts");

  // eval
  auto* ev = app.add_subcommand("eval", "robust and clean error of a model on a dataset");
  add_common(ev, c, false);
  ev->add_option("--model", model_path, "model JSON")->required();
  ev->add_option("--data", data_path, "dataset CSV")->required();

  // attack
  auto* at = app.add_subcommand("attack", "per-row worst-case verdicts with explicit witnesses");
  add_common(at, c, false);
  at->add_option("--model", model_path, "model JSON")->required();
  at->add_option("--data", data_path, "dataset CSV")->required();

  // encode
  auto* en = app.add_subcommand("encode", "print the sign-code tables for one (w, x)");
  add_common(en, c, true);
  std::string x_text, w_text;
  en->add_option("--x", x_text, "comma-separated input")->required()->allow_extra_args(false);
  en->add_option("--w", w_text, "comma-separated weights")->required()->allow_extra_args(false);

  // growth
  auto* gr = app.add_subcommand("growth", "growth-function bounds and a sampled pattern census");
  add_common(gr, c, true);
  std::uint64_t trials = 10000;
  unsigned threads = 1;
  gr->add_option("--n", n, "number of points")->required();
  gr->add_option("--trials", trials, "sampled weight vectors");
  gr->add_option("--data", data_path, "use these points and labels instead of random ones");
  gr->add_option("--threads", threads, "worker threads");

  // bound
  auto* bd = app.add_subcommand("bound", "generalization bound, or the n needed to reach --epsilon");
  add_common(bd, c, true);
  double delta = 0.05;
  double epsilon = 0.0;
  auto* n_opt = bd->add_option("--n", n, "sample size");
  auto* eps_opt = bd->add_option("--epsilon", epsilon, "target bound; reports the smallest sufficient n");
  bd->add_option("--delta", delta, "failure probability");
  n_opt->excludes(eps_opt);

  // experiment
  auto* ex = app.add_subcommand("experiment", "generalization-gap experiment on a Gaussian mixture");
  add_common(ex, c, true);
  std::string n_grid = "250,1000,4000";
  std::size_t n_test = 20000, ex_trials = 20;
  TrainConfig etc;
  etc.epochs = 30;
  double ex_l2 = 0.0;
  ex->add_option("--mu", mu, "class mean (one value or d values)");
  ex->add_option("--sigma", sigma, "per-coordinate variance (one value or d values)");
  ex->add_option("--n-grid", n_grid, "comma-separated training sizes");
  ex->add_option("--n-test", n_test, "test set size");
  ex->add_option("--trials", ex_trials, "trials per training size");
  ex->add_option("--epochs", etc.epochs, "epochs per restart");
  ex->add_option("--step", etc.initial_step, "initial step size");
  ex->add_option("--restarts", etc.restarts, "restarts per training run");
  ex->add_option("--l2-cap", ex_l2, "project w onto the l2 ball of this radius");
  ex->add_option("--delta", delta, "failure probability for the reported bound");
  ex->add_option("--threads", threads, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return kExitValidation;
  }

  try {
    if (gen->parsed()) {
      resolve_format(c.format, "csv", {"csv"});
      const auto cfg = checked_config(c.d, c.k);
      GaussianMixtureConfig mix{broadcast(mu, cfg.d(), "mu"), broadcast(sigma, cfg.d(), "sigma"), n, c.seed};
      const Dataset data = sample_mixture(mix);
      emit(c, out, [&](std::ostream& os) { write_dataset(data, os); });

    } else if (tr->parsed()) {
      const auto fmt_name = resolve_format(c.format, "json", {"json", "csv"});
      const Dataset data = read_dataset(data_path);
      if (tr->count("--d") && c.d != data.dim()) {
        throw DimensionMismatch("--d " + std::to_string(c.d) + " does not match the data (d=" +
                                std::to_string(data.dim()) + ")");
      }
      if (!tr->count("--k")) throw ValidationError("--k is required");
      const auto cfg = checked_config(data.dim(), c.k);
      tc.seed = c.seed;
      if (tr->count("--l2-cap")) tc.l2_cap = l2_cap;
      const TrainReport report = train(data, cfg, tc);
      for (const auto& w : report.warnings) err << "warning: " << w << '\n';
      emit(c, out, [&](std::ostream& os) { write_json(os, to_json(report.model)); });
      if (!report_path.empty()) {
        std::ofstream rf(report_path, std::ios::binary);
        if (!rf) throw ValidationError("cannot open " + report_path + " for writing");
        if (fmt_name == "json") {
          write_json(rf, to_json(report));
        } else {
          print_train_csv(rf, report);
        }
      }

    } else if (ev->parsed()) {
      const auto fmt_name = resolve_format(c.format, "json", {"json", "csv"});
      const Model model = read_model(model_path);
      check_model_flags(c, ev, model);
      const Dataset data = model.prepare(read_dataset(data_path));
      const auto wcfg = model.weight_config();
      std::size_t clean_wrong = 0;
      for (std::size_t i = 0; i < data.size(); ++i) {
        if (sign(trunc_inner(model.w, data.x(i), wcfg)) != data.y(i)) ++clean_wrong;
      }
      const double n_rows = static_cast<double>(std::max<std::size_t>(1, data.size()));
      const double robust = data.empty() ? 0.0 : empirical_robust_loss(model.w, data, wcfg);
      const double clean = data.empty() ? 0.0 : static_cast<double>(clean_wrong) / n_rows;
      emit(c, out, [&](std::ostream& os) {
        if (fmt_name == "json") {
          Json j;
          j["n"] = data.size();
          j["d"] = model.d;
          j["k"] = model.k;
          j["robust_error"] = robust;
          j["clean_error"] = clean;
          write_json(os, j);
        } else {
          os << "n,d,k,robust_error,clean_error\n"
             << data.size() << ',' << model.d << ',' << model.k << ',' << fmt(robust) << ',' << fmt(clean) << '\n';
        }
      });

    } else if (at->parsed()) {
      const auto fmt_name = resolve_format(c.format, "json", {"json", "csv"});
      const Model model = read_model(model_path);
      check_model_flags(c, at, model);
      const Dataset data = model.prepare(read_dataset(data_path));
      const auto wcfg = model.weight_config();
      std::vector<RobustEvaluation> evals;
      std::size_t robust_wrong = 0, clean_wrong = 0;
      for (std::size_t i = 0; i < data.size(); ++i) {
        evals.push_back(evaluate_robust(model.w, data.x(i), data.y(i), wcfg));
        if (evals.back().misclassified) ++robust_wrong;
        if (evals.back().clean_sign != data.y(i)) ++clean_wrong;
      }
      const double n_rows = static_cast<double>(std::max<std::size_t>(1, data.size()));
      const double robust = static_cast<double>(robust_wrong) / n_rows;
      const double clean = static_cast<double>(clean_wrong) / n_rows;
      emit(c, out, [&](std::ostream& os) {
        if (fmt_name == "json") {
          Json rows = Json::array();
          for (std::size_t i = 0; i < evals.size(); ++i) {
            Json r;
            r["row"] = i;
            r["y"] = data.y(i);
            r["misclassified"] = evals[i].misclassified;
            r["witness"] = evals[i].witness ? Json(*evals[i].witness) : Json(nullptr);
            rows.push_back(std::move(r));
          }
          Json j;
          j["rows"] = std::move(rows);
          j["summary"] = Json{{"n", data.size()}, {"robust_error", robust}, {"clean_error", clean}};
          write_json(os, j);
        } else {
          os << "row,y,misclassified,witness\n";
          for (std::size_t i = 0; i < evals.size(); ++i) {
            os << i << ',' << data.y(i) << ',' << (evals[i].misclassified ? 1 : 0) << ','
               << (evals[i].witness ? join(*evals[i].witness, ';') : "") << '\n';
          }
        }
      });

    } else if (en->parsed()) {
      const auto fmt_name = resolve_format(c.format, "table", {"table", "json", "csv"});
      const auto cfg = checked_config(c.d, c.k);
      const auto x = broadcast(x_text, cfg.d(), "x");
      const WeightVector w(broadcast(w_text, cfg.d(), "w"));
      const CodeBasis basis(cfg);
      const SignCode code = encode(basis, w, x);
      const auto order = recover_order(basis, code);
      const auto positions = middle_positions(cfg);
      std::vector<std::size_t> coords;
      for (std::size_t p : positions) coords.push_back(order[p]);
      std::sort(coords.begin(), coords.end());
      const std::size_t chosen = basis.alpha_index(coords);
      const int final_sign = decode(basis, code, positions);
      if (final_sign != sign(trunc_inner(w, x, cfg))) {
        throw InternalInconsistency("decoded sign disagrees with the direct truncated inner product");
      }
      emit(c, out, [&](std::ostream& os) {
        if (fmt_name == "table") {
          print_encode_table(os, basis, w, x, code, order, chosen, final_sign);
        } else if (fmt_name == "json") {
          Json j;
          j["d"] = cfg.d();
          j["k"] = cfg.k();
          j["alpha_signs"] = code.alpha_signs;
          j["beta_signs"] = code.beta_signs;
          std::vector<std::size_t> order1;
          for (std::size_t i : order) order1.push_back(i + 1);
          j["order"] = order1;
          j["alpha_index"] = chosen + 1;
          j["sign"] = final_sign;
          write_json(os, j);
        } else {
          os << "kind,i,vector,sign\n";
          for (std::size_t i = 0; i < basis.alpha_count(); ++i) {
            os << "alpha," << i + 1 << ",\"" << tuple(basis.alpha_vector(i)) << "\"," << code.alpha_signs[i] << '\n';
          }
          for (std::size_t j = 0; j < basis.beta_count(); ++j) {
            os << "beta," << j + 1 << ",\"" << tuple(basis.beta_vector(j)) << "\"," << code.beta_signs[j] << '\n';
          }
        }
      });

    } else if (gr->parsed()) {
      const auto fmt_name = resolve_format(c.format, "json", {"json", "csv"});
      const auto cfg = checked_config(c.d, c.k);
      check_n(n, cfg.d());
      std::vector<std::vector<double>> xs;
      std::vector<int> ys;
      if (!data_path.empty()) {
        const Dataset data = read_dataset(data_path);
        if (data.dim() != cfg.d()) {
          throw DimensionMismatch("dataset has d=" + std::to_string(data.dim()) + ", --d is " + std::to_string(cfg.d()));
        }
        if (data.size() != n) {
          throw ValidationError("dataset has " + std::to_string(data.size()) + " rows, --n is " + std::to_string(n));
        }
        for (std::size_t i = 0; i < data.size(); ++i) {
          xs.emplace_back(data.x(i).begin(), data.x(i).end());
          ys.push_back(data.y(i));
        }
      } else {
        // points and labels come from streams disjoint from the census trials
        Rng rng(derive_seed(c.seed ^ 0x9e3779b97f4a7c15ULL, 0));
        std::normal_distribution<double> g(0.0, 1.0);
        std::bernoulli_distribution coin(0.5);
        for (std::uint64_t i = 0; i < n; ++i) {
          std::vector<double> x(cfg.d());
          for (double& v : x) v = g(rng);
          xs.push_back(std::move(x));
          ys.push_back(coin(rng) ? 1 : -1);
        }
      }
      const auto report = census_patterns(xs, std::span<const int>(ys), cfg, trials, c.seed, threads);
      emit(c, out, [&](std::ostream& os) {
        if (fmt_name == "json") {
          write_json(os, to_json(report));
        } else {
          os << "n,d,k,log_bound_T,log_bound_Ttilde,observed_patterns_T,observed_patterns_Ttilde,trials,sampler_seed\n"
             << report.n << ',' << report.d << ',' << report.k << ','
             << (report.bound_T ? fmt(report.bound_T->log_value) : "") << ','
             << (report.bound_Ttilde ? fmt(report.bound_Ttilde->log_value) : "") << ','
             << report.observed_patterns_T << ','
             << (report.observed_patterns_Ttilde ? std::to_string(*report.observed_patterns_Ttilde) : "") << ','
             << report.trials << ',' << report.sampler_seed << '\n';
        }
      });

    } else if (bd->parsed()) {
      const auto fmt_name = resolve_format(c.format, "json", {"json", "csv"});
      checked_config(c.d, c.k);
      std::optional<double> eps;
      if (*eps_opt) {
        eps = epsilon;
        n = sample_complexity(epsilon, delta, c.d, c.k);
      } else if (!*n_opt) {
        throw ValidationError("bound needs --n or --epsilon");
      }
      check_n(n, c.d);
      const BoundReport report = theorem1_bound(n, c.d, c.k, delta);
      emit(c, out, [&](std::ostream& os) {
        if (fmt_name == "json") {
          Json j = to_json(report);
          if (eps) j["epsilon"] = *eps;
          write_json(os, j);
        } else {
          os << "n,d,k,delta,c,complexity_term,confidence_term,total" << (eps ? ",epsilon" : "") << '\n'
             << report.n << ',' << report.d << ',' << report.k << ',' << fmt(report.delta) << ',' << fmt(report.c)
             << ',' << fmt(report.complexity_term) << ',' << fmt(report.confidence_term) << ',' << fmt(report.total);
          if (eps) os << ',' << fmt(*eps);
          os << '\n';
        }
      });

    } else if (ex->parsed()) {
      const auto fmt_name = resolve_format(c.format, "json", {"json", "csv"});
      const auto cfg = checked_config(c.d, c.k);
      GaussianMixtureConfig mix{broadcast(mu, cfg.d(), "mu"), broadcast(sigma, cfg.d(), "sigma"), 0, c.seed};
      etc.seed = c.seed;
      if (ex->count("--l2-cap")) etc.l2_cap = ex_l2;
      const auto report =
          generalization_experiment(mix, cfg, etc, parse_sizes(n_grid, "n-grid"), n_test, ex_trials, delta, threads);
      emit(c, out, [&](std::ostream& os) {
        if (fmt_name == "json") {
          write_json(os, to_json(report));
        } else {
          os << "n,trial,train_loss,test_loss,gap,bound\n";
          for (const auto& r : report.rows) {
            os << r.n << ',' << r.trial << ',' << fmt(r.train_loss) << ',' << fmt(r.test_loss) << ',' << fmt(r.gap)
               << ',' << fmt(r.bound) << '\n';
          }
        }
      });
    }
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "internal error: " << msg << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace trunclin::cli
