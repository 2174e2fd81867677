// Command-line front end. Exit codes: 0 ok, 1 internal inconsistency, 2 invalid input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "arq/arq.hpp"

namespace {

using namespace arq;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kBadInput = 2;

std::string pos(ZVertex v) {
    return "(" + std::to_string(v.level) + "," + std::to_string(v.base) + ")";
}

void write_out(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + path);
    f << text;
}

int cmd_classify(const std::string& file) {
    const ValuedQuiver q = parse_file(file);
    auto d = classify_dynkin(underlying_graph(q));
    if (!d) {
        std::cout << "NotDynkin\n";
        return kBadInput;
    }
    std::cout << to_string(*d) << "\n";
    std::cout << "relabel";
    for (int x = 1; x <= q.n(); ++x) std::cout << " " << x << "->" << d->relabel[static_cast<size_t>(x - 1)];
    std::cout << "\n";
    return kOk;
}

int cmd_build(const std::string& file, const std::string& json_out, const std::string& dot_out, bool hammocks) {
    const ValuedQuiver q = parse_file(file);
    const Report r = make_report(q, hammocks);
    if (report_from_json(to_json(r)) != r) throw Error(ErrorKind::CrossCheckFailed, "report does not round-trip");
    if (!dot_out.empty()) write_out(dot_out, to_dot(build(q)));
    if (!json_out.empty()) write_out(json_out, to_json(r));
    if (json_out.empty() && dot_out.empty()) std::cout << to_json(r);
    return kOk;
}

int cmd_hammock(const std::string& file, int k) {
    const ValuedQuiver q = parse_file(file);
    if (!classify_dynkin(underlying_graph(q))) throw Error(ErrorKind::NotDynkin, "underlying valued graph is not a Dynkin diagram");
    const HammockResult h = knit_hammock(q, k);
    std::cout << "k " << k << "\n";
    for (const auto& [v, value] : h.table) std::cout << "h" << pos(v) << " = " << value << "\n";
    std::cout << "terminator " << pos(h.terminator) << "\n";
    std::cout << "m(" << h.rho_pair.first << ") = " << h.m_of << "\n";
    std::cout << "rho(" << h.rho_pair.first << ") = " << h.rho_pair.second << "\n";
    std::cout << "hammock";
    for (const ZVertex& v : hammock_vertices(h)) std::cout << " " << pos(v);
    std::cout << "\n";
    return kOk;
}

int cmd_coxeter(const std::string& file) {
    const ARQuiver arq = build(parse_file(file));
    const CoxeterData cd = coxeter_matrix(arq);
    for (const auto& row : cd.cox) {
        for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
        std::cout << "\n";
    }
    const bool identity = order_identity_check(arq, cd);
    std::cout << "order " << cd.order << "\n";
    std::cout << "table " << table_order(arq.dynkin.family, arq.dynkin.rank) << "\n";
    std::cout << "order identity " << (identity ? "pass" : "FAIL") << "\n";
    return identity ? kOk : kInternal;
}

int cmd_cluster(const std::string& file) {
    const ARQuiver arq = build(parse_file(file));
    const CoxeterData cd = coxeter_matrix(arq);
    const Counts c = counts_and_nilpotency(arq, cd.order);
    std::cout << "cluster count " << cluster_counts(arq, cd) << "\n";
    std::cout << "nilpotency module " << c.nilpotency << " derived " << derived_nilpotency(arq, cd) << " cluster "
              << cluster_nilpotency(arq, cd) << "\n";
    return kOk;
}

int cmd_check(const std::string& file) {
    const ValuedQuiver q = parse_file(file);
    if (!classify_dynkin(underlying_graph(q))) throw Error(ErrorKind::NotDynkin, "underlying valued graph is not a Dynkin diagram");
    const OracleReport rep = run_all_checks(q);
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.where.empty()) std::cout << " at " << c.where;
        std::cout << "\n";
    }
    bool roundtrip = false;
    try {
        const Report r = make_report(q, true);
        roundtrip = report_from_json(to_json(r)) == r;
    } catch (const Error& e) {
        std::cout << "FAIL report " << e.what() << "\n";
    }
    std::cout << (roundtrip ? "PASS" : "FAIL") << " report_roundtrip\n";
    return rep.ok() && roundtrip ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Auslander-Reiten quivers of Dynkin ext-quivers"};
    app.require_subcommand(1);
    std::string file, json_out, dot_out;
    int k = 0;
    bool hammocks = false;

    auto* classify = app.add_subcommand("classify", "Recognize the Dynkin type");
    classify->add_option("file", file, "Quiver description")->required();
    auto* buildc = app.add_subcommand("build", "Build the full report");
    buildc->add_option("file", file, "Quiver description")->required();
    buildc->add_option("--json", json_out, "Write the JSON report here ('-' for stdout)");
    buildc->add_option("--dot", dot_out, "Write the DOT diagram here ('-' for stdout)");
    buildc->add_flag("--hammocks", hammocks, "Include hammock tables in the report");
    auto* hammock = app.add_subcommand("hammock", "Knit one hammock function");
    hammock->add_option("file", file, "Quiver description")->required();
    hammock->add_option("-k", k, "Vertex")->required();
    auto* coxeter = app.add_subcommand("coxeter", "Coxeter matrix and order");
    coxeter->add_option("file", file, "Quiver description")->required();
    auto* cluster = app.add_subcommand("cluster", "Cluster category counts");
    cluster->add_option("file", file, "Quiver description")->required();
    auto* check = app.add_subcommand("check", "Run every oracle check");
    check->add_option("file", file, "Quiver description")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*classify) return cmd_classify(file);
        if (*buildc) return cmd_build(file, json_out, dot_out, hammocks);
        if (*hammock) return cmd_hammock(file, k);
        if (*coxeter) return cmd_coxeter(file);
        if (*cluster) return cmd_cluster(file);
        if (*check) return cmd_check(file);
    } catch (const arq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return arq::is_input_error(e.kind()) ? kBadInput : kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kBadInput;
}
