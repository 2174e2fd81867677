#include "arq/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arq/coxeter.hpp"
#include "arq/derived.hpp"
#include "arq/error.hpp"

namespace arq {

using nlohmann::json;

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    size_t p = 0;
    while (p < line.size()) {
        while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
        size_t q = p;
        while (q < line.size() && line[q] != ' ' && line[q] != '\t') ++q;
        if (q > p) out.push_back(line.substr(p, q - p));
        p = q;
    }
    return out;
}

int to_int(const std::string& tok, int line) {
    int value = 0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || ptr != end) throw Error(ErrorKind::SyntaxError, "expected an integer, got '" + tok + "'", line);
    return value;
}

}  // namespace

ValuedQuiver parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    int n = -1;
    std::vector<Arrow> arrows;
    std::vector<int> arrow_lines;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto tok = tokenize(raw);
        if (tok.empty()) continue;
        if (tok[0] == "n") {
            if (n >= 0) throw Error(ErrorKind::SyntaxError, "duplicate 'n' line", line);
            if (tok.size() != 2) throw Error(ErrorKind::SyntaxError, "expected 'n <count>'", line);
            n = to_int(tok[1], line);
            if (n < 1) throw Error(ErrorKind::SyntaxError, "vertex count must be positive", line);
        } else if (tok[0] == "arrow") {
            if (n < 0) throw Error(ErrorKind::SyntaxError, "'n' line must come first", line);
            if (tok.size() != 3 && tok.size() != 5)
                throw Error(ErrorKind::SyntaxError, "expected 'arrow <src> <dst> [<a> <b>]'", line);
            Arrow a{to_int(tok[1], line), to_int(tok[2], line), {1, 1}};
            if (tok.size() == 5) a.val = {to_int(tok[3], line), to_int(tok[4], line)};
            arrows.push_back(a);
            arrow_lines.push_back(line);
        } else {
            throw Error(ErrorKind::SyntaxError, "unknown keyword '" + tok[0] + "'", line);
        }
    }
    if (n < 0) throw Error(ErrorKind::SyntaxError, "missing 'n <count>' line", std::max(line, 1));
    try {
        return ValuedQuiver::validate(n, std::move(arrows));
    } catch (const Error& e) {
        if (e.item() >= 0) throw e.with_line(arrow_lines[static_cast<size_t>(e.item())]);
        throw;
    }
}

ValuedQuiver parse_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

Report make_report(const ValuedQuiver& q, bool with_hammocks) {
    const ARQuiver arq = build(q);
    if (closed_form_rho_m(q) != RhoM{arq.m, arq.rho})
        throw Error(ErrorKind::CrossCheckFailed, "closed-form rho/m disagree with the hammock knit");
    const CoxeterData cd = coxeter_matrix(arq);
    if (!order_identity_check(arq, cd)) throw Error(ErrorKind::CrossCheckFailed, "Coxeter order identity fails");
    const Counts counts = counts_and_nilpotency(arq, cd.order);

    Report r;
    r.dynkin = {std::string(1, family_letter(arq.dynkin.family)), arq.dynkin.rank, arq.dynkin.relabel};
    r.coxeter_order = cd.order;
    r.rho = arq.rho;
    r.m = arq.m;
    r.counts = {counts.indecomposables, cluster_counts(arq, cd)};
    r.nilpotency = {counts.nilpotency, derived_nilpotency(arq, cd), cluster_nilpotency(arq, cd)};
    for (const ZVertex& v : arq.vertices) r.vertices.push_back({v.level, v.base, arq.dims.at(v)});
    std::sort(r.vertices.begin(), r.vertices.end(),
              [](const auto& x, const auto& y) { return std::pair(x.i, x.r) < std::pair(y.i, y.r); });
    for (const ZArrow& a : arq.arrows)
        r.arrows.push_back({{a.src.level, a.src.base}, {a.dst.level, a.dst.base}, {a.val.a, a.val.b}});
    std::sort(r.arrows.begin(), r.arrows.end(), [](const auto& x, const auto& y) {
        return std::tuple(x.src.i, x.src.r, x.dst.i, x.dst.r) < std::tuple(y.src.i, y.src.r, y.dst.i, y.dst.r);
    });
    if (with_hammocks) {
        r.hammocks.emplace();
        for (const HammockResult& h : arq.hammocks) {
            ReportHammock rh;
            rh.k = h.k;
            rh.terminator = {h.terminator.level, h.terminator.base};
            for (const auto& [v, value] : h.table) rh.table.push_back({v.level, v.base, value});
            for (const ZVertex& v : hammock_vertices(h)) rh.vertices.push_back({v.level, v.base});
            r.hammocks->push_back(std::move(rh));
        }
    }
    return r;
}

namespace {

json pos_json(const ReportPos& p) {
    return json{{"r", p.r}, {"i", p.i}};
}

ReportPos pos_from(const json& j) {
    return {j.at("r").get<int>(), j.at("i").get<int>()};
}

}  // namespace

std::string to_json(const Report& r) {
    json j;
    j["dynkin"] = {{"family", r.dynkin.family}, {"rank", r.dynkin.rank}, {"relabel", r.dynkin.relabel}};
    j["coxeter_order"] = r.coxeter_order;
    j["rho"] = r.rho;
    j["m"] = r.m;
    j["counts"] = {{"indecomposables", r.counts.indecomposables}, {"cluster", r.counts.cluster}};
    j["nilpotency"] = {{"module", r.nilpotency.module}, {"derived", r.nilpotency.derived}, {"cluster", r.nilpotency.cluster}};
    j["vertices"] = json::array();
    for (const auto& v : r.vertices) j["vertices"].push_back({{"r", v.r}, {"i", v.i}, {"dim", v.dim}});
    j["arrows"] = json::array();
    for (const auto& a : r.arrows) j["arrows"].push_back({{"src", pos_json(a.src)}, {"dst", pos_json(a.dst)}, {"val", a.val}});
    if (r.hammocks) {
        j["hammocks"] = json::array();
        for (const auto& h : *r.hammocks) {
            json t = json::array(), vs = json::array();
            for (const auto& e : h.table) t.push_back({{"r", e.r}, {"i", e.i}, {"h", e.h}});
            for (const auto& v : h.vertices) vs.push_back(pos_json(v));
            j["hammocks"].push_back({{"k", h.k}, {"terminator", pos_json(h.terminator)}, {"table", t}, {"vertices", vs}});
        }
    }
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        Report r;
        const json& d = j.at("dynkin");
        r.dynkin = {d.at("family").get<std::string>(), d.at("rank").get<int>(), d.at("relabel").get<std::vector<int>>()};
        r.coxeter_order = j.at("coxeter_order").get<int>();
        r.rho = j.at("rho").get<std::vector<int>>();
        r.m = j.at("m").get<std::vector<int>>();
        r.counts = {j.at("counts").at("indecomposables").get<long long>(), j.at("counts").at("cluster").get<long long>()};
        const json& nil = j.at("nilpotency");
        r.nilpotency = {nil.at("module").get<int>(), nil.at("derived").get<int>(), nil.at("cluster").get<int>()};
        for (const json& v : j.at("vertices"))
            r.vertices.push_back({v.at("r").get<int>(), v.at("i").get<int>(), v.at("dim").get<std::vector<long long>>()});
        for (const json& a : j.at("arrows"))
            r.arrows.push_back({pos_from(a.at("src")), pos_from(a.at("dst")), a.at("val").get<std::vector<int>>()});
        if (j.contains("hammocks")) {
            r.hammocks.emplace();
            for (const json& h : j.at("hammocks")) {
                ReportHammock rh;
                rh.k = h.at("k").get<int>();
                rh.terminator = pos_from(h.at("terminator"));
                for (const json& e : h.at("table"))
                    rh.table.push_back({e.at("r").get<int>(), e.at("i").get<int>(), e.at("h").get<long long>()});
                for (const json& v : h.at("vertices")) rh.vertices.push_back(pos_from(v));
                r.hammocks->push_back(std::move(rh));
            }
        }
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::SyntaxError, std::string("report JSON: ") + e.what());
    }
}

namespace {

std::string node_id(ZVertex v) {
    return "v" + std::to_string(v.level) + "_" + std::to_string(v.base);
}

}  // namespace

std::string to_dot(const ARQuiver& arq) {
    std::ostringstream out;
    out << "digraph ARQuiver {\n  rankdir=LR;\n  node [fontname=\"Helvetica\" fontsize=10];\n";
    std::vector<bool> injective_at(arq.vertices.size(), false);
    for (int i = 1; i <= arq.n(); ++i) injective_at[static_cast<size_t>(arq.index_of(arq.injective(i)))] = true;
    int max_level = 0;
    for (const ZVertex& v : arq.vertices) max_level = std::max(max_level, v.level);
    for (int r = 0; r <= max_level; ++r) {
        out << "  subgraph level_" << r << " {\n    rank=same;\n";
        for (size_t idx = 0; idx < arq.vertices.size(); ++idx) {
            const ZVertex v = arq.vertices[idx];
            if (v.level != r) continue;
            const bool proj = v.level == 0, inj = injective_at[idx];
            std::string shape = proj ? "box" : inj ? "doublecircle" : "ellipse";
            out << "    " << node_id(v) << " [label=\"(" << v.level << "," << v.base << ")\\n";
            const DimVector& d = arq.dims.at(v);
            for (size_t k = 0; k < d.size(); ++k) out << (k ? " " : "") << d[k];
            out << "\" shape=" << shape;
            if (proj && inj) out << " peripheries=2";
            out << "];\n";
        }
        out << "  }\n";
    }
    for (const ZArrow& a : arq.arrows) {
        out << "  " << node_id(a.src) << " -> " << node_id(a.dst);
        if (!a.val.trivial()) out << " [label=\"(" << a.val.a << "," << a.val.b << ")\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace arq
