#ifndef SIMPLEXOPT_IO_HPP
#define SIMPLEXOPT_IO_HPP

#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "simplexopt/generators.hpp"
#include "simplexopt/objective.hpp"
#include "simplexopt/solver.hpp"

namespace simplexopt {

// doubles serialize as base64 of their little-endian 64-bit representation;
// exact round-trips matter more than a readable matrix dump
std::string base64_encode(const unsigned char* data, std::size_t len);
std::string base64_decode(const std::string& text);
std::string doubles_to_base64(const Vec& v);
Vec base64_to_doubles(const std::string& text);

/// Number formatting used in all emitted files: shortest repr that
/// round-trips a double.
std::string fmt_double(double v);

struct ProblemMeta {
    std::string generator;  // free-form description of how the instance was built
    std::uint64_t seed = 0;
    double rho = 0.0;
    double theta = 0.0;
    std::optional<Vec> planted_x;
};

struct LoadedProblem {
    std::string kind;  // "quadratic" | "chebyshev"
    std::shared_ptr<Objective> objective;
    ProblemMeta meta;
};

void save_quadratic(const std::string& path, const QuadraticObjective& obj,
                    const ProblemMeta& meta);
void save_chebyshev(const std::string& path, const ChebyshevObjective& obj,
                    const ProblemMeta& meta);
LoadedProblem load_problem(const std::string& path);

void write_trace_csv(std::ostream& os, const SolveResult& result);
void write_trace_csv_file(const std::string& path, const SolveResult& result);

}  // namespace simplexopt

#endif
