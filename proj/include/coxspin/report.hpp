#pragma once

// End-to-end reproduction of the rank-3 → rank-4 correspondence table.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxspin/coxeter.hpp"
#include "coxspin/serialize.hpp"

namespace coxspin {

struct TableRow {
    std::size_t roots;
    std::size_t order;
    std::size_t spinors;
    std::string binary_group;
    std::string rank4;
    std::size_t rank4_roots;
    bool pure_quat;
};

/// The expected row for each rank-3 group.
TableRow expected_row(CoxeterGroup g);

struct GroupRecord {
    CoxeterGroup group{};
    std::size_t roots = 0;
    bool roots_verified = false;
    std::size_t order = 0;
    std::size_t spinors = 0;
    std::string binary_group;
    std::string rank4;
    std::size_t rank4_roots = 0;
    bool rank4_verified = false;
    bool pure_quat = false;
    bool pure_quat_biconditional = false;
    bool catalog_match = false;
    bool two_generator = false;
    std::optional<std::string> error;  // a pipeline stage threw
    std::vector<std::string> failed_cells;

    bool pass() const { return failed_cells.empty(); }
};

struct RunReport {
    std::vector<GroupRecord> rows;

    bool pass() const;
    std::vector<std::string> failures() const;
};

using PresetOverrides = std::map<CoxeterGroup, SimpleRoots>;

/// Runs one group's pipeline from the given simple roots and grades it against expected_row(g).
GroupRecord run_group(CoxeterGroup g, const SimpleRoots& simple);

/// Runs all four pipelines concurrently; overrides replace a group's preset simple roots.
RunReport verify_table(const PresetOverrides& overrides = {});

Json to_json(const GroupRecord& r);
Json to_json(const RunReport& r);

}  // namespace coxspin
