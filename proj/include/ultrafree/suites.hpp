#pragma once

#include "ultrafree/budget.hpp"
#include "ultrafree/graph.hpp"
#include "ultrafree/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ultrafree {

struct CatalogEntry {
    std::string id;
    Graph graph;
};

enum class CatalogKind { small, extended };

inline constexpr std::uint64_t default_catalog_seed = 20240611;

/// small: every connected graph on at most 7 vertices (ids "c<n>_<i>").
/// extended: small plus 100 seeded random graphs on 8..12 vertices (ids "r<i>").
std::vector<CatalogEntry> graph_catalog(CatalogKind kind, std::uint64_t seed = default_catalog_seed);

struct SuiteOptions {
    std::string suite;  // table1 | halfgraph | construction:d=D | mindeg-ultra | codeg-edge | vc-chromatic
    CatalogKind catalog = CatalogKind::small;
    std::uint64_t seed = default_catalog_seed;
    SearchBudget budget;
};

/// Throws PreconditionViolated for an unknown suite name.
Report run_suite(const SuiteOptions& options);

/// Suite names accepted by run_suite (construction takes a ":d=D" suffix).
std::vector<std::string> suite_names();

}  // namespace ultrafree
