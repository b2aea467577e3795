#include "coxspin/report.hpp"

#include <future>

#include "coxspin/spingroup.hpp"

namespace coxspin {

namespace {

template <typename T>
void grade(GroupRecord& rec, const char* cell, const T& got, const T& want) {
    if (got == want) return;
    std::string msg = std::string(label(rec.group)) + "." + cell;
    if constexpr (std::is_same_v<T, bool>) {
        msg += std::string(" (expected ") + (want ? "true" : "false") + ", got " + (got ? "true" : "false") + ")";
    } else if constexpr (std::is_same_v<T, std::string>) {
        msg += " (expected " + want + ", got " + got + ")";
    } else {
        msg += " (expected " + std::to_string(want) + ", got " + std::to_string(got) + ")";
    }
    rec.failed_cells.push_back(std::move(msg));
}

}  // namespace

TableRow expected_row(CoxeterGroup g) {
    switch (g) {
        case CoxeterGroup::a1x3: return {6, 8, 8, "Q", "A1x4", 8, true};
        case CoxeterGroup::a3: return {12, 24, 24, "2T", "D4", 24, false};
        case CoxeterGroup::b3: return {18, 48, 48, "2O", "F4", 48, true};
        case CoxeterGroup::h3: return {30, 120, 120, "2I", "H4", 120, true};
    }
    throw std::invalid_argument("unknown Coxeter group");
}

GroupRecord run_group(CoxeterGroup g, const SimpleRoots& simple) {
    GroupRecord rec;
    rec.group = g;
    rec.binary_group = binary_group_name(g);
    rec.rank4 = rank4_label(g);
    try {
        RootSystem3 rs = orbit_closure(simple);
        rs.verified = verify_root_system(rs).pass;
        rec.roots = rs.size();
        rec.roots_verified = rs.verified;

        const SpinorSet spinors = generate_rotors(rs);
        rec.spinors = spinors.size();
        const VersorGroup versors = generate_versor_group(rs);
        rec.order = versors.transformations().size();

        const auto pure = check_pure_quaternion_subrootsystem(rs, spinors, versors);
        rec.pure_quat = pure.holds;
        rec.pure_quat_biconditional = pure.biconditional;
        rec.catalog_match = spinors.quaternions() == expected_catalog(g);
        rec.two_generator = generate_from_two(simple).rotors == spinors.rotors;

        const RootSystem4 rank4 = induce_rank4(spinors, rec.rank4);
        rec.rank4_roots = rank4.size();
        rec.rank4_verified = rank4.verified;
    } catch (const std::exception& e) {
        rec.error = e.what();
    }

    const TableRow want = expected_row(g);
    if (rec.error) rec.failed_cells.push_back(std::string(label(g)) + ".pipeline (" + *rec.error + ")");
    grade(rec, "roots", rec.roots, want.roots);
    grade(rec, "roots_verified", rec.roots_verified, true);
    grade(rec, "order", rec.order, want.order);
    grade(rec, "spinors", rec.spinors, want.spinors);
    grade(rec, "catalog", rec.catalog_match, true);
    grade(rec, "two_generator", rec.two_generator, true);
    grade(rec, "rank4_roots", rec.rank4_roots, want.rank4_roots);
    grade(rec, "rank4_verified", rec.rank4_verified, true);
    grade(rec, "pure_quat", rec.pure_quat, want.pure_quat);
    grade(rec, "pure_quat_biconditional", rec.pure_quat_biconditional, true);
    return rec;
}

bool RunReport::pass() const {
    for (const auto& r : rows) {
        if (!r.pass()) return false;
    }
    return !rows.empty();
}

std::vector<std::string> RunReport::failures() const {
    std::vector<std::string> out;
    for (const auto& r : rows) out.insert(out.end(), r.failed_cells.begin(), r.failed_cells.end());
    return out;
}

RunReport verify_table(const PresetOverrides& overrides) {
    std::vector<std::future<GroupRecord>> jobs;
    for (CoxeterGroup g : all_groups) {
        const auto it = overrides.find(g);
        SimpleRoots simple = it != overrides.end() ? it->second : preset(g);
        jobs.push_back(std::async(std::launch::async, [g, simple = std::move(simple)] { return run_group(g, simple); }));
    }
    RunReport report;
    for (auto& j : jobs) report.rows.push_back(j.get());
    return report;
}

Json to_json(const GroupRecord& r) {
    Json out = {{"group", std::string(label(r.group))},
                {"roots", r.roots},
                {"order", r.order},
                {"spinors", r.spinors},
                {"binary_group", r.binary_group},
                {"rank4", r.rank4},
                {"rank4_roots", r.rank4_roots},
                {"pure_quat", r.pure_quat},
                {"catalog_match", r.catalog_match},
                {"two_generator", r.two_generator},
                {"pass", r.pass()},
                {"failed_cells", r.failed_cells}};
    return out;
}

Json to_json(const RunReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back(to_json(row));
    return {{"rows", std::move(rows)}, {"pass", r.pass()}};
}

}  // namespace coxspin
