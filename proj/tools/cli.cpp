#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "coxspin/spingroup.hpp"

namespace coxspin::cli {

namespace {

std::string render(const Vector3& v) {
    return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + ")";
}

std::string render(const QuaternionF& q) {
    return "(" + to_string(q[0]) + ", " + to_string(q[1]) + ", " + to_string(q[2]) + ", " + to_string(q[3]) + ")";
}

std::string catalog_name(CoxeterGroup g) {
    switch (g) {
        case CoxeterGroup::a1x3: return "Lipschitz";
        case CoxeterGroup::a3: return "Hurwitz";
        case CoxeterGroup::b3: return "Hurwitz ∪ duals";
        case CoxeterGroup::h3: return "icosians";
    }
    return "unknown";
}

void write_json(const std::string& path, const Json& j) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << j.dump(2) << '\n';
}

Json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return Json::parse(f);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_roots(const std::string& group, const std::string& input, const std::string& json_out, std::ostream& out) {
    RootSystem3 rs;
    if (!input.empty()) {
        rs = root_system_from_json<3>(read_json(input));
    } else {
        rs = orbit_closure(preset(*parse_group(group)));
    }
    const auto cert = verify_root_system(rs);
    rs.verified = cert.pass;
    out << "group: " << rs.group << '\n' << "roots: " << rs.size() << '\n';
    for (const auto& r : rs.roots) out << "  " << render(r) << '\n';
    out << "verified: " << yes_no(rs.verified) << '\n';
    if (cert.witness) {
        out << "violation: axiom " << cert.witness->axiom << ", roots " << cert.witness->first << " and "
            << cert.witness->second << ": " << cert.witness->message << '\n';
    }
    if (!json_out.empty()) write_json(json_out, to_json(rs));
    return rs.verified ? exit_pass : exit_mismatch;
}

int cmd_spinors(CoxeterGroup g, bool from_two, const std::string& json_out, std::ostream& out) {
    const RootSystem3 rs = orbit_closure(preset(g));
    const SpinorSet spinors = from_two ? generate_from_two(preset(g)) : generate_rotors(rs);
    const bool match = spinors.quaternions() == expected_catalog(g);
    out << spinors.size() << " spinors; matches " << catalog_name(g) << ": " << yes_no(match) << '\n';
    for (const auto& q : spinors.quaternions()) out << "  " << render(q) << '\n';
    if (!json_out.empty()) {
        const auto census = classify_versors(generate_versor_group(rs));
        write_json(json_out, spinor_report_json(std::string(label(g)), spinors, census,
                                                induce_rank4(spinors, rank4_label(g))));
    }
    return match ? exit_pass : exit_mismatch;
}

int cmd_versors(CoxeterGroup g, const std::string& json_out, std::ostream& out) {
    const RootSystem3 rs = orbit_closure(preset(g));
    const auto c = classify_versors(generate_versor_group(rs));
    out << "group: " << label(g) << '\n'
        << "versors: " << c.versors << " (even " << c.even_versors << ", odd " << c.odd_versors << ")\n"
        << "transformations: " << c.transformations << '\n'
        << "rotations: " << c.rotations << " (identity included)\n";
    for (const auto& [order, n] : c.rotations_by_order) out << "  order " << order << ": " << n << '\n';
    out << "odd transformations: " << c.odd_transformations << '\n'
        << "reflections: " << c.reflections << '\n'
        << "rotoinversions: " << c.rotoinversions << '\n'
        << "central inversion: " << (c.central_inversion ? "present" : "absent") << '\n';
    if (!json_out.empty()) write_json(json_out, to_json(c));
    return exit_pass;
}

int cmd_cartan(CoxeterGroup g, const std::string& json_out, std::ostream& out) {
    const auto cm = cartan_matrix(preset(g));
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 0;
    for (Eigen::Index i = 0; i < cm.entries.rows(); ++i) {
        auto& row = cells.emplace_back();
        for (Eigen::Index j = 0; j < cm.entries.cols(); ++j) {
            row.push_back(to_string(cm.entries(i, j)));
            width = std::max(width, row.back().size());
        }
    }
    out << "Cartan matrix of " << display_name(g) << ":\n";
    for (const auto& row : cells) {
        out << " ";
        for (const auto& c : row) out << ' ' << std::setw(static_cast<int>(width)) << c;
        out << '\n';
    }
    out << "Coxeter exponents m_ij:\n";
    for (Eigen::Index i = 0; i < cm.coxeter_exponents.rows(); ++i) {
        out << " ";
        for (Eigen::Index j = 0; j < cm.coxeter_exponents.cols(); ++j) out << ' ' << cm.coxeter_exponents(i, j);
        out << '\n';
    }
    if (!json_out.empty()) {
        Json entries = Json::array();
        for (Eigen::Index i = 0; i < cm.entries.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index j = 0; j < cm.entries.cols(); ++j) row.push_back(to_json(cm.entries(i, j)));
            entries.push_back(std::move(row));
        }
        Json m = Json::array();
        for (Eigen::Index i = 0; i < cm.coxeter_exponents.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index j = 0; j < cm.coxeter_exponents.cols(); ++j) row.push_back(cm.coxeter_exponents(i, j));
            m.push_back(std::move(row));
        }
        write_json(json_out, {{"group", std::string(label(g))}, {"cartan", entries}, {"coxeter_exponents", m}});
    }
    return exit_pass;
}

int cmd_verify_table(const std::string& json_out, const PresetOverrides& overrides, std::ostream& out,
                     std::ostream& err) {
    const RunReport report = verify_table(overrides);
    out << std::left << std::setw(10) << "group" << std::setw(7) << "roots" << std::setw(7) << "|W|"
        << std::setw(10) << "spinors" << std::setw(7) << "rank4" << std::setw(8) << "roots4" << std::setw(11)
        << "pure_quat" << "status\n";
    for (const auto& r : report.rows) {
        out << std::setw(10) << display_name(r.group) << std::setw(7) << r.roots << std::setw(7) << r.order
            << std::setw(10) << (std::to_string(r.spinors) + " (" + r.binary_group + ")") << std::setw(7) << r.rank4
            << std::setw(8) << r.rank4_roots << std::setw(11) << yes_no(r.pure_quat) << (r.pass() ? "ok" : "FAIL")
            << '\n';
    }
    for (const auto& f : report.failures()) err << "mismatch: " << f << '\n';
    out << (report.pass() ? "all rows match" : "table mismatch") << '\n';
    if (!json_out.empty()) write_json(json_out, to_json(report));
    return report.pass() ? exit_pass : exit_mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const PresetOverrides& overrides) {
    CLI::App app{"Exact Clifford-algebra construction of rank-3 Coxeter root systems and their rank-4 spinor groups",
                 "coxspin"};
    app.require_subcommand(1);
    const std::vector<std::string> groups{"a1x3", "a3", "b3", "h3"};

    std::string group;
    std::string json_out;
    std::string input;
    bool from_two = false;

    auto* roots = app.add_subcommand("roots", "Root system from reflection closure of the simple roots");
    roots->add_option("group", group, "a1x3 | a3 | b3 | h3")->check(CLI::IsMember(groups));
    roots->add_option("--input", input, "Verify a RootSystem JSON file instead of a preset")->check(CLI::ExistingFile);
    roots->add_option("--json", json_out, "Write the RootSystem as JSON");

    auto* spinors = app.add_subcommand("spinors", "Rotor group generated by the roots");
    spinors->add_option("group", group, "a1x3 | a3 | b3 | h3")->required()->check(CLI::IsMember(groups));
    spinors->add_flag("--from-two", from_two, "Generate from alpha1*alpha2 and alpha2*alpha3 only");
    spinors->add_option("--json", json_out, "Write the spinor report as JSON");

    auto* versors = app.add_subcommand("versors", "Versor group census");
    versors->add_option("group", group, "a1x3 | a3 | b3 | h3")->required()->check(CLI::IsMember(groups));
    versors->add_option("--json", json_out, "Write the census as JSON");

    auto* cartan = app.add_subcommand("cartan", "Cartan matrix of the simple roots");
    cartan->add_option("group", group, "a1x3 | a3 | b3 | h3")->required()->check(CLI::IsMember(groups));
    cartan->add_option("--json", json_out, "Write the matrix as JSON");

    auto* table = app.add_subcommand("verify-table", "Run all four pipelines and check every table cell");
    table->add_option("--json", json_out, "Write the run report as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (roots->parsed() && group.empty() && input.empty()) {
            throw CLI::RequiredError("roots needs a group or --input");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (roots->parsed()) return cmd_roots(group, input, json_out, out);
        const CoxeterGroup g = group.empty() ? CoxeterGroup::a1x3 : *parse_group(group);
        if (spinors->parsed()) return cmd_spinors(g, from_two, json_out, out);
        if (versors->parsed()) return cmd_versors(g, json_out, out);
        if (cartan->parsed()) return cmd_cartan(g, json_out, out);
        if (table->parsed()) return cmd_verify_table(json_out, overrides, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_mismatch;
    }
    return exit_usage;
}

}  // namespace coxspin::cli
