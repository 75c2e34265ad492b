// Copyright 2026 The choibasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <json.hpp>

#include "choibasis/channel_basis.hpp"
#include "choibasis/channels.hpp"
#include "choibasis/choi.hpp"
#include "choibasis/linalg.hpp"

// Text file formats read and written by the command-line tool. All files are
// JSON objects; complex entries are [re, im] pairs and every real number is
// written with 17 significant digits so that a read-back is value-identical.
//
//   matrix file:  {"kind": K, "dx": n, "dy": m, "data": D}
//                 K = choi | unitary | correlation | kraus; D is one matrix
//                 (array of rows) or, for kraus, an array of matrices.
//   vector file:  {"dx": n, "dy": m, "values": [...]}, plus "layout" after
//                 "dy" when the coefficients are not in the product layout
//   basis file:   {"dx": n, "dy": m, "layout": L,
//                  "elements": [{"label": "...", "matrix": M}, ...]}

namespace choibasis::io {

/// Malformed or inconsistent input file.
class FormatError : public Error {
 public:
  using Error::Error;
};

enum class MatrixKind { choi, unitary, correlation, kraus };

inline std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::choi:
      return "choi";
    case MatrixKind::unitary:
      return "unitary";
    case MatrixKind::correlation:
      return "correlation";
    case MatrixKind::kraus:
      return "kraus";
  }
  return {};
}

inline MatrixKind matrix_kind_from_string(const std::string& s) {
  if (s == "choi") return MatrixKind::choi;
  if (s == "unitary") return MatrixKind::unitary;
  if (s == "correlation") return MatrixKind::correlation;
  if (s == "kraus") return MatrixKind::kraus;
  throw FormatError("unknown matrix kind \"" + s + "\"");
}

struct MatrixFile {
  MatrixKind kind = MatrixKind::choi;
  int dx = 0;
  int dy = 0;
  /// One matrix, or the Kraus operators for kind == kraus.
  std::vector<ComplexMatrix> data;
};

struct VectorFile {
  int dx = 0;
  int dy = 0;
  std::vector<double> values;
  /// Written only for non-default layouts; absent means product.
  BasisLayout layout = BasisLayout::product;
};

inline BasisLayout layout_from_string(const std::string& s) {
  if (s == "product") return BasisLayout::product;
  if (s == "matrix-unit") return BasisLayout::matrix_unit;
  throw FormatError("unknown basis layout \"" + s + "\"");
}

// ---------------------------------------------------------------------------
// writing

namespace detail {

inline void append_number(std::string& out, double x) {
  char buf[64];
  const auto result =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  out.append(buf, result.ptr);
}

inline void append_matrix(std::string& out, const ComplexMatrix& m,
                          std::string_view indent) {
  out += "[\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += indent;
    out += "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += '[';
      append_number(out, m(i, j).real());
      out += ", ";
      append_number(out, m(i, j).imag());
      out += ']';
    }
    out += (i + 1 < m.rows()) ? "],\n" : "]\n";
  }
  out += indent;
  out += ']';
}

inline std::string quoted(const std::string& s) {
  return nlohmann::json(s).dump();
}

}  // namespace detail

inline std::string serialize(const MatrixFile& file) {
  std::string out = "{\n";
  out += "  \"kind\": " + detail::quoted(to_string(file.kind)) + ",\n";
  out += "  \"dx\": " + std::to_string(file.dx) + ",\n";
  out += "  \"dy\": " + std::to_string(file.dy) + ",\n";
  out += "  \"data\": ";
  if (file.kind == MatrixKind::kraus) {
    out += "[\n";
    for (std::size_t k = 0; k < file.data.size(); ++k) {
      out += "    ";
      detail::append_matrix(out, file.data[k], "    ");
      out += (k + 1 < file.data.size()) ? ",\n" : "\n";
    }
    out += "  ]";
  } else {
    detail::append_matrix(out, file.data.at(0), "  ");
  }
  out += "\n}\n";
  return out;
}

inline std::string serialize(const VectorFile& file) {
  std::string out = "{\n";
  out += "  \"dx\": " + std::to_string(file.dx) + ",\n";
  out += "  \"dy\": " + std::to_string(file.dy) + ",\n";
  if (file.layout != BasisLayout::product) {
    out += "  \"layout\": " + detail::quoted(to_string(file.layout)) + ",\n";
  }
  out += "  \"values\": [";
  for (std::size_t k = 0; k < file.values.size(); ++k) {
    out += k ? ",\n    " : "\n    ";
    detail::append_number(out, file.values[k]);
  }
  out += file.values.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline std::string serialize(const ChannelBasis& basis) {
  std::string out = "{\n";
  out += "  \"dx\": " + std::to_string(basis.dx) + ",\n";
  out += "  \"dy\": " + std::to_string(basis.dy) + ",\n";
  out += "  \"layout\": " + detail::quoted(to_string(basis.layout)) + ",\n";
  out += "  \"elements\": [\n";
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out += "    {\n      \"label\": " +
           detail::quoted(basis.labels[k].describe()) + ",\n";
    out += "      \"matrix\": ";
    detail::append_matrix(out, basis[k], "      ");
    out += (k + 1 < basis.size()) ? "\n    },\n" : "\n    }\n";
  }
  out += "  ]\n}\n";
  return out;
}

// ---------------------------------------------------------------------------
// reading

namespace detail {

using nlohmann::json;

inline const json& field(const json& obj, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) {
    throw FormatError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

inline int positive_int(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number_integer() || v.get<long long>() < 1 ||
      v.get<long long>() > 1'000'000) {
    throw FormatError(std::string("field \"") + name +
                      "\" must be a positive integer");
  }
  return v.get<int>();
}

inline double real_number(const json& v) {
  if (!v.is_number()) throw FormatError("expected a number, got " + v.dump());
  return v.get<double>();
}

inline ComplexMatrix parse_matrix(const json& rows) {
  if (!rows.is_array() || rows.empty()) {
    throw FormatError("matrix must be a non-empty array of rows");
  }
  const std::size_t nrows = rows.size();
  const json& first = rows.front();
  if (!first.is_array() || first.empty()) {
    throw FormatError("matrix rows must be non-empty arrays");
  }
  const std::size_t ncols = first.size();
  ComplexMatrix m(static_cast<Eigen::Index>(nrows),
                  static_cast<Eigen::Index>(ncols));
  for (std::size_t i = 0; i < nrows; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != ncols) {
      throw FormatError("matrix row " + std::to_string(i) +
                        " does not have " + std::to_string(ncols) +
                        " entries");
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      const json& z = row[j];
      if (!z.is_array() || z.size() != 2) {
        throw FormatError("matrix entry must be an [re, im] pair, got " +
                          z.dump());
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          Complex(real_number(z[0]), real_number(z[1]));
    }
  }
  if (!all_finite(m)) throw FormatError("matrix has non-finite entries");
  return m;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

inline void require_shape(const ComplexMatrix& m, Eigen::Index rows,
                          Eigen::Index cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw FormatError(what + " has shape " + choibasis::detail::shape_of(m) +
                      ", expected " + std::to_string(rows) + "x" +
                      std::to_string(cols));
  }
}

}  // namespace detail

inline MatrixFile parse_matrix_file(const std::string& text) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object()) throw FormatError("matrix file must be a JSON object");
  const auto& kind_field = detail::field(doc, "kind");
  if (!kind_field.is_string()) throw FormatError("\"kind\" must be a string");

  MatrixFile file;
  file.kind = matrix_kind_from_string(kind_field.get<std::string>());
  file.dx = detail::positive_int(doc, "dx");
  file.dy = detail::positive_int(doc, "dy");
  const auto& data = detail::field(doc, "data");

  if (file.kind == MatrixKind::kraus) {
    if (!data.is_array() || data.empty()) {
      throw FormatError("kraus data must be a non-empty array of matrices");
    }
    for (std::size_t k = 0; k < data.size(); ++k) {
      ComplexMatrix m = detail::parse_matrix(data[k]);
      detail::require_shape(m, file.dy, file.dx,
                            "Kraus operator " + std::to_string(k));
      file.data.push_back(std::move(m));
    }
    return file;
  }

  ComplexMatrix m = detail::parse_matrix(data);
  if (file.kind == MatrixKind::choi) {
    const Eigen::Index side = static_cast<Eigen::Index>(file.dx) * file.dy;
    detail::require_shape(m, side, side, "Choi matrix");
  } else {
    if (file.dx != file.dy) {
      throw FormatError(to_string(file.kind) + " file requires dx == dy");
    }
    detail::require_shape(m, file.dx, file.dx, to_string(file.kind) +
                                                   " matrix");
  }
  file.data.push_back(std::move(m));
  return file;
}

inline VectorFile parse_vector_file(const std::string& text) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object()) throw FormatError("vector file must be a JSON object");
  VectorFile file;
  file.dx = detail::positive_int(doc, "dx");
  file.dy = detail::positive_int(doc, "dy");
  if (const auto it = doc.find("layout"); it != doc.end()) {
    if (!it->is_string()) throw FormatError("\"layout\" must be a string");
    file.layout = layout_from_string(it->get<std::string>());
  }
  const auto& values = detail::field(doc, "values");
  if (!values.is_array()) throw FormatError("\"values\" must be an array");
  file.values.reserve(values.size());
  for (const auto& v : values) file.values.push_back(detail::real_number(v));
  const long long expected = subspace_dimension(file.dx, file.dy);
  if (static_cast<long long>(file.values.size()) != expected) {
    throw FormatError("vector has length " +
                      std::to_string(file.values.size()) + " but dx=" +
                      std::to_string(file.dx) + " dy=" +
                      std::to_string(file.dy) + " requires " +
                      std::to_string(expected));
  }
  return file;
}

struct BasisFileElement {
  std::string label;
  ComplexMatrix matrix;
};

struct BasisFile {
  int dx = 0;
  int dy = 0;
  std::string layout;
  std::vector<BasisFileElement> elements;
};

inline BasisFile parse_basis_file(const std::string& text) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object()) throw FormatError("basis file must be a JSON object");
  BasisFile file;
  file.dx = detail::positive_int(doc, "dx");
  file.dy = detail::positive_int(doc, "dy");
  const auto& layout = detail::field(doc, "layout");
  if (!layout.is_string()) throw FormatError("\"layout\" must be a string");
  file.layout = layout.get<std::string>();
  const auto& elements = detail::field(doc, "elements");
  if (!elements.is_array()) throw FormatError("\"elements\" must be an array");
  const Eigen::Index side = static_cast<Eigen::Index>(file.dx) * file.dy;
  for (const auto& e : elements) {
    const auto& label = detail::field(e, "label");
    if (!label.is_string()) throw FormatError("\"label\" must be a string");
    ComplexMatrix m = detail::parse_matrix(detail::field(e, "matrix"));
    detail::require_shape(m, side, side, "basis element");
    file.elements.push_back({label.get<std::string>(), std::move(m)});
  }
  return file;
}

// ---------------------------------------------------------------------------
// conversions

inline MatrixFile to_matrix_file(const ChoiMatrix& choi) {
  return {MatrixKind::choi, choi.dx(), choi.dy(), {choi.matrix()}};
}

inline VectorFile to_vector_file(const CoefficientVector& v,
                                 BasisLayout layout = BasisLayout::product) {
  return {v.dx(), v.dy(),
          std::vector<double>(v.values().data(),
                              v.values().data() + v.values().size()),
          layout};
}

inline CoefficientVector to_coefficients(const VectorFile& file) {
  RealVector values(static_cast<Eigen::Index>(file.values.size()));
  for (std::size_t k = 0; k < file.values.size(); ++k) {
    values(static_cast<Eigen::Index>(k)) = file.values[k];
  }
  return CoefficientVector(file.dx, file.dy, std::move(values));
}

struct ConvertedChoi {
  ChoiMatrix choi;
  /// false only for a correlation matrix that is not PSD within psd_tol.
  bool completely_positive = true;
};

/// Choi matrix described by a matrix file. Unitaries and Kraus sets are
/// converted through choi_from_kraus, correlation matrices through
/// schur_channel.
inline ConvertedChoi to_choi(const MatrixFile& file,
                             double tol = kDefaultTolerance) {
  switch (file.kind) {
    case MatrixKind::choi:
      return {ChoiMatrix(file.dx, file.dy, file.data.at(0)), true};
    case MatrixKind::unitary:
      return {unitary_channel(file.data.at(0), tol), true};
    case MatrixKind::correlation: {
      auto schur = schur_channel(CorrelationMatrix(file.data.at(0), tol), tol);
      return {std::move(schur.choi), schur.completely_positive};
    }
    case MatrixKind::kraus:
      return {choi_from_kraus(KrausSet(file.dx, file.dy, file.data)), true};
  }
  throw FormatError("unknown matrix kind");
}

// ---------------------------------------------------------------------------
// file access; "-" means standard input / output

inline std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open \"" + path + "\" for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open \"" + path + "\" for writing");
  out << text;
  if (!out) throw FormatError("failed writing \"" + path + "\"");
}

}  // namespace choibasis::io
