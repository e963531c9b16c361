#include "trunclin/data.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "trunclin/errors.hpp"
#include "trunclin/random.hpp"

namespace trunclin {
namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ValidationError line_error(std::size_t line, const std::string& what) {
  return ValidationError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

void GaussianMixtureConfig::validate() const {
  if (mu.empty()) throw ValidationError("mixture mean must have at least one coordinate");
  if (sigma_diag.size() != mu.size()) {
    throw DimensionMismatch("mixture variance has " + std::to_string(sigma_diag.size()) + " entries, mean has " +
                            std::to_string(mu.size()));
  }
  for (double s : sigma_diag) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("mixture variances must be positive and finite");
  }
  for (double m : mu) {
    if (!std::isfinite(m)) throw ValidationError("mixture mean must be finite");
  }
}

Dataset sample_mixture(const GaussianMixtureConfig& cfg) {
  cfg.validate();
  const std::size_t d = cfg.mu.size();
  std::vector<double> scale(d);
  for (std::size_t j = 0; j < d; ++j) scale[j] = std::sqrt(cfg.sigma_diag[j]);

  Rng rng(cfg.seed);
  std::bernoulli_distribution coin(0.5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Dataset out(d);
  std::vector<double> x(d);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const int y = coin(rng) ? 1 : -1;
    for (std::size_t j = 0; j < d; ++j) x[j] = y * cfg.mu[j] + scale[j] * gauss(rng);
    out.add(x, y);
  }
  return out;
}

void write_dataset(const Dataset& data, std::ostream& out) {
  for (std::size_t j = 0; j < data.dim(); ++j) out << 'x' << (j + 1) << ',';
  out << "y\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (double v : data.x(i)) out << format_double(v) << ',';
    out << data.y(i) << '\n';
  }
}

void write_dataset(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  write_dataset(data, out);
  if (!out) throw ValidationError("failed writing " + path.string());
}

Dataset read_dataset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("dataset is empty (missing header)");
  const auto header = split(line);
  if (header.size() < 2 || header.back() != "y") throw line_error(1, "header must be x1,...,xd,y");
  const std::size_t d = header.size() - 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (header[j] != "x" + std::to_string(j + 1)) {
      throw line_error(1, "expected column x" + std::to_string(j + 1) + ", got '" + std::string(header[j]) + "'");
    }
  }

  Dataset data(d);
  std::vector<double> x(d);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != d + 1) {
      throw line_error(lineno, "expected " + std::to_string(d + 1) + " fields, got " + std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j < d; ++j) {
      const auto f = fields[j];
      const auto res = std::from_chars(f.data(), f.data() + f.size(), x[j]);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size() || !std::isfinite(x[j])) {
        throw line_error(lineno, "malformed number '" + std::string(f) + "' in column x" + std::to_string(j + 1));
      }
    }
    const auto lf = fields[d];
    if (lf != "1" && lf != "-1") throw line_error(lineno, "label must be -1 or 1, got '" + std::string(lf) + "'");
    data.add(x, lf == "1" ? 1 : -1);
  }
  return data;
}

Dataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  return read_dataset(in);
}

}  // namespace trunclin
