#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitpart/catalog.hpp"
#include "orbitpart/partition.hpp"
#include "orbitpart/solver.hpp"
#include "orbitpart/symmetry.hpp"

namespace orbitpart {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// {order, mul, labels, dim, mats}; matrices row-major per element.
std::string representation_to_json(const Representation& rep);
Representation representation_from_json(const std::string& text, const std::string& source = "<string>");

/// N i.i.d. standard normal points in R^d from a seeded mt19937_64,
/// drawn point by point.
Configuration generate_points(int d, int count, std::uint64_t seed);

/// One point per row, 17 significant digits.
std::string points_to_csv(const Configuration& config);
std::string points_to_json(const Configuration& config);
/// CSV rows or a JSON object {"points": [[...], ...]}. Parse errors name
/// the source and the byte offset.
Configuration points_from_text(const std::string& text, const std::string& source = "<string>");
Configuration read_points(const std::string& path);

/// Everything the partition command produces.
struct PartitionRun {
    std::string rep_key;
    int r = 0;
    int d = 0;
    int n_points = 0;
    SolverOptions options;
    SolverResult solver;
    std::optional<OrbitPartition> partition;
    CheckList checks;
    std::vector<std::string> warnings;
    std::optional<IntersectionReport> intersection;
};

/// Builds the test map, solves, assembles and verifies. A run that does not
/// converge is returned with an empty partition.
PartitionRun run_partition(const std::string& rep_key, const Representation& rep, const Configuration& config,
                           const SolverOptions& options);

std::string partition_to_json(const PartitionRun& run, const Representation& rep);
PartitionRun partition_from_json(const std::string& text, const Representation& rep,
                                 const std::string& source = "<string>");

std::string checks_to_json(const CheckList& checks);

struct OracleReport {
    bool below_threshold = false;
    int n_points = 0;
    std::uint64_t assignments = 0;
    double brute_force_residual = 0.0;
    std::vector<Element> brute_force_assignment;
    std::optional<double> pivoting_residual;
    std::optional<bool> pivoting_converged;
};

/// Compares exhaustive search with pivoting on the given points. Below the
/// threshold only the exhaustive minimum is reported.
OracleReport run_oracle(const Representation& rep, const Configuration& config, bool below_threshold,
                        const SolverOptions& options);
std::string oracle_to_json(const OracleReport& report);

std::string symmetry_to_json(const SymmetryReport& report, const Representation& rep, const Vec& u);
std::string catalog_to_json(const std::vector<CatalogEntry>& entries);
std::string irreducibility_to_json(const Representation& rep, const std::string& key);

}  // namespace orbitpart
