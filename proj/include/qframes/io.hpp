#pragma once

// Wire formats. Frames and matrices travel as JSON with [re, im] entry
// pairs; Wigner tables as CSV with a fixed header and 17-significant-digit
// values; heatmaps as ASCII PGM with the affine value range recorded in a
// header comment.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qframes/composite.hpp"
#include "qframes/frames.hpp"
#include "qframes/matrix.hpp"
#include "qframes/opframes.hpp"
#include "qframes/tomo.hpp"

namespace qframes {

namespace detail {

inline std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// { "d": int, "vectors": [[[re, im], ...], ...] }
inline nlohmann::json frame_to_json(const Frame& f) {
  nlohmann::json vectors = nlohmann::json::array();
  for (int k = 0; k < f.count(); ++k) {
    nlohmann::json vec = nlohmann::json::array();
    for (int i = 0; i < f.dim(); ++i) {
      const ComplexScalar z = f.vector(k)(i);
      vec.push_back({z.real(), z.imag()});
    }
    vectors.push_back(std::move(vec));
  }
  return {{"d", f.dim()}, {"vectors", std::move(vectors)}};
}

inline Frame frame_from_json(const nlohmann::json& j) {
  const int d = j.at("d").get<int>();
  const auto& vectors = j.at("vectors");
  if (!vectors.is_array() || vectors.empty()) {
    throw std::invalid_argument("frame JSON: missing vectors");
  }
  ComplexMatrix cols(d, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const auto& vec = vectors[k];
    if (static_cast<int>(vec.size()) != d) {
      throw std::invalid_argument("frame JSON: vector dimension mismatch");
    }
    for (int i = 0; i < d; ++i) {
      cols(i, static_cast<Eigen::Index>(k)) =
          ComplexScalar(vec[i][0].get<double>(), vec[i][1].get<double>());
    }
  }
  return Frame(std::move(cols));
}

// { "rows": int, "cols": int, "entries": [[[re, im], ...], ...] } row-major.
inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (static_cast<Eigen::Index>(entries.size()) != rows) {
    throw std::invalid_argument("matrix JSON: row count mismatch");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = entries[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix JSON: column count mismatch");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& e = row[static_cast<std::size_t>(k)];
      m(i, k) = ComplexScalar(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

// Header "j,k,value"; rows in lexicographic (j,k) order.
inline std::string wigner_to_csv(const WignerTable& t) {
  std::string out = "j,k,value\n";
  for (Eigen::Index j = 0; j < t.rows(); ++j) {
    for (Eigen::Index k = 0; k < t.cols(); ++k) {
      out += std::to_string(j);
      out += ',';
      out += std::to_string(k);
      out += ',';
      out += detail::fmt17(t(j, k));
      out += '\n';
    }
  }
  return out;
}

inline WignerTable wigner_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "j,k,value") {
    throw std::invalid_argument("wigner CSV: bad header");
  }
  struct Row {
    int j, k;
    double v;
  };
  std::vector<Row> rows;
  int max_index = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Row r{};
    if (std::sscanf(line.c_str(), "%d,%d,%lf", &r.j, &r.k, &r.v) != 3) {
      throw std::invalid_argument("wigner CSV: bad row: " + line);
    }
    max_index = std::max({max_index, r.j, r.k});
    rows.push_back(r);
  }
  const int n = max_index + 1;
  if (n <= 0 || rows.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("wigner CSV: not a full square grid");
  }
  WignerTable t(n, n);
  for (const Row& r : rows) t(r.j, r.k) = r.v;
  return t;
}

// Header "j,l,k,m,value"; lexicographic in (j,l,k,m).
inline std::string composite_to_csv(const CompositeWignerTable& t) {
  std::string out = "j,l,k,m,value\n";
  for (int j = 0; j < t.count1; ++j) {
    for (int l = 0; l < t.count2; ++l) {
      for (int k = 0; k < t.count1; ++k) {
        for (int m = 0; m < t.count2; ++m) {
          out += std::to_string(j) + ',' + std::to_string(l) + ',' +
                 std::to_string(k) + ',' + std::to_string(m) + ',' +
                 detail::fmt17(t(j, l, k, m)) + '\n';
        }
      }
    }
  }
  return out;
}

// ASCII PGM (P2). Values are mapped affinely from [min, max] onto 0..255;
// the range is recorded in a comment so the mapping can be inverted.
inline std::string wigner_to_pgm(const WignerTable& t) {
  const double lo = t.minCoeff();
  const double hi = t.maxCoeff();
  const double span = hi > lo ? hi - lo : 1.0;
  std::string out = "P2\n# min " + detail::fmt17(lo) + " max " +
                    detail::fmt17(hi) + "\n" + std::to_string(t.cols()) +
                    " " + std::to_string(t.rows()) + "\n255\n";
  for (Eigen::Index j = 0; j < t.rows(); ++j) {
    for (Eigen::Index k = 0; k < t.cols(); ++k) {
      const int g = static_cast<int>(
          std::lround(255.0 * (t(j, k) - lo) / span));
      out += std::to_string(std::min(255, std::max(0, g)));
      out += k + 1 == t.cols() ? '\n' : ' ';
    }
  }
  return out;
}

inline nlohmann::json report_to_json(const NoiseExperimentReport& r) {
  return {{"epsilon", r.epsilon},     {"trials", r.trials},
          {"seed", r.seed},           {"mean_frame", r.mean_frame},
          {"mean_basis", r.mean_basis}, {"stderr_frame", r.stderr_frame},
          {"stderr_basis", r.stderr_basis}, {"rng", r.rng}};
}

}  // namespace qframes
