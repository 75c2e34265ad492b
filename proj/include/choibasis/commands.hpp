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

#include <cstdint>
#include <exception>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "choibasis/channel_basis.hpp"
#include "choibasis/channels.hpp"
#include "choibasis/choi.hpp"
#include "choibasis/io.hpp"

// Subcommands of the choibasis tool as plain functions. Each returns the
// process exit status; results go to the output file (or `out` when no file
// is given) and diagnostics to `err`.

namespace choibasis::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kNotInSubspace = 3,
};

struct Options {
  double tol = kDefaultTolerance;
  double membership_tol = kMembershipTolerance;
  BasisLayout layout = BasisLayout::product;
};

/// Largest acceptable trace-norm error of a represent/combine round trip.
inline constexpr double kRoundTripTolerance = 1e-12;

namespace detail {

inline std::string scientific(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(15) << x;
  return os.str();
}

inline std::string full(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

/// Writes `text` to `path`, or to `out` when no path is given.
inline void emit(const std::optional<std::string>& path,
                 const std::string& text, std::ostream& out) {
  if (path && *path != "-") {
    io::write_text(*path, text);
  } else {
    out << text << std::flush;
  }
}

/// Prefixes `what` with the command name unless it already carries it.
inline std::string error_line(const char* name, const char* what) {
  const std::string prefix = std::string(name) + ": ";
  const std::string message = what;
  return "error: " +
         (message.rfind(prefix, 0) == 0 ? message : prefix + message);
}

/// Runs `body`, mapping library errors onto exit codes.
template <typename Body>
int guarded(const char* name, std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const NotInSubspaceError& e) {
    err << error_line(name, e.what()) << "\n";
    err << "residual trace norm: " << scientific(e.residual()) << "\n";
    return kNotInSubspace;
  } catch (const std::exception& e) {
    err << error_line(name, e.what()) << "\n";
    return kInputError;
  }
}

}  // namespace detail

inline int cmd_represent(const std::string& input,
                         const std::optional<std::string>& output,
                         const Options& opts, std::ostream& out,
                         std::ostream& err) {
  return detail::guarded("represent", err, [&] {
    const auto file = io::parse_matrix_file(io::read_text(input));
    const auto converted = io::to_choi(file, opts.tol);
    const ChoiMatrix& choi = converted.choi;
    const ChannelBasis basis = channel_basis(choi.dx(), choi.dy(), opts.layout);
    const CoefficientVector v = represent(basis, choi, opts.membership_tol);
    detail::emit(output, io::serialize(io::to_vector_file(v, opts.layout)),
                 out);
    std::ostream& summary = (output && *output != "-") ? out : err;
    summary << "dim_S: " << v.size() << "\n";
    summary << "coefficient_0: " << detail::full(v[0]) << "\n";
    return static_cast<int>(kSuccess);
  });
}

inline int cmd_combine(const std::string& input,
                       const std::optional<std::string>& output,
                       std::ostream& out, std::ostream& err) {
  return detail::guarded("combine", err, [&] {
    const auto file = io::parse_vector_file(io::read_text(input));
    const CoefficientVector v = io::to_coefficients(file);
    const ChannelBasis basis = channel_basis(file.dx, file.dy, file.layout);
    const ChoiMatrix choi = combine(basis, v);
    detail::emit(output, io::serialize(io::to_matrix_file(choi)), out);
    return static_cast<int>(kSuccess);
  });
}

inline int cmd_check(const std::string& input, const Options& opts,
                     std::ostream& out, std::ostream& err) {
  return detail::guarded("check", err, [&] {
    const auto file = io::parse_matrix_file(io::read_text(input));
    const ChoiMatrix choi = io::to_choi(file, opts.tol).choi;
    const bool cp = is_completely_positive(choi, opts.tol);
    const bool tp = is_trace_preserving(choi, opts.tol);
    const bool hp = is_hermiticity_preserving(choi, opts.tol);
    const Complex trace = choi.matrix().trace();
    out << std::boolalpha;
    out << "completely_positive: " << cp << "\n";
    out << "trace_preserving: " << tp << "\n";
    out << "hermiticity_preserving: " << hp << "\n";
    out << "min_eigenvalue: " << detail::full(
                                     min_eigenvalue_hermitian(choi.matrix()))
        << "\n";
    out << "trace: " << detail::full(trace.real());
    if (trace.imag() != 0.0) out << " + " << detail::full(trace.imag()) << "i";
    out << "\n";
    out << "order_unit_pairing: " << detail::full(trace.real() / choi.dx())
        << "\n";
    return static_cast<int>((cp && tp) ? kSuccess : kCheckFailed);
  });
}

inline int cmd_roundtrip(const std::string& input, const Options& opts,
                         std::ostream& out, std::ostream& err) {
  return detail::guarded("roundtrip", err, [&] {
    const auto file = io::parse_matrix_file(io::read_text(input));
    const ChoiMatrix choi = io::to_choi(file, opts.tol).choi;
    const ChannelBasis basis = channel_basis(choi.dx(), choi.dy(), opts.layout);
    const ChoiMatrix recovered =
        combine(basis, represent(basis, choi, opts.membership_tol));
    const double error = trace_norm(choi.matrix() - recovered.matrix());
    out << "trace_norm_error: " << detail::scientific(error) << "\n";
    return static_cast<int>(error <= kRoundTripTolerance ? kSuccess
                                                         : kCheckFailed);
  });
}

inline int cmd_basis(int dx, int dy, const std::optional<std::string>& output,
                     const Options& opts, std::ostream& out,
                     std::ostream& err) {
  return detail::guarded("basis", err, [&] {
    const ChannelBasis basis = channel_basis(dx, dy, opts.layout);
    detail::emit(output, io::serialize(basis), out);
    return static_cast<int>(kSuccess);
  });
}

inline int cmd_random(int dx, int dy, int kraus_rank, std::uint64_t seed,
                      const std::optional<std::string>& output,
                      std::ostream& out, std::ostream& err) {
  return detail::guarded("random", err, [&] {
    const ChoiMatrix choi = random_channel(dx, dy, kraus_rank, seed);
    detail::emit(output, io::serialize(io::to_matrix_file(choi)), out);
    return static_cast<int>(kSuccess);
  });
}

}  // namespace choibasis::cli
