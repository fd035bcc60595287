#include "deltahall/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "deltahall/errors.hpp"

namespace deltahall {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw config_error("malformed JSON in " + what);
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json quad_json(const QuadNumber& x) {
    return json{{"a", rational_to_string(x.rat_part())},
                {"b", rational_to_string(x.rad_part())}};
}

}  // namespace

Quiver quiver_from_json(const std::string& text) {
    json j = parse(text, "quiver");
    if (!j.is_object() || !j.contains("vertices") ||
        !j["vertices"].is_number_integer())
        throw config_error("quiver JSON needs an integer \"vertices\" field");
    int n = j["vertices"].get<int>();
    std::vector<Arrow> arrows;
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array())
            throw config_error("quiver \"arrows\" must be an array");
        for (const auto& a : j["arrows"]) {
            if (!a.is_array() || a.size() != 2 ||
                !a[0].is_number_integer() || !a[1].is_number_integer())
                throw config_error("each arrow must be a pair [source, target]");
            arrows.push_back(Arrow{a[0].get<int>(), a[1].get<int>()});
        }
    }
    return Quiver(n, std::move(arrows));  // ctor rejects loops / bad indices
}

Quiver load_quiver_file(const std::string& path) {
    return quiver_from_json(slurp(path));
}

TwistForm twist_from_json(const std::string& text, int vertex_count) {
    json j = parse(text, "twist form");
    if (!j.is_object() || !j.contains("T") || !j["T"].is_array())
        throw config_error("twist JSON needs a matrix field \"T\"");
    std::vector<std::vector<long long>> t;
    for (const auto& row : j["T"]) {
        if (!row.is_array())
            throw config_error("twist rows must be arrays of integers");
        std::vector<long long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw config_error("twist entries must be integers");
            r.push_back(v.get<long long>());
        }
        t.push_back(std::move(r));
    }
    if (static_cast<int>(t.size()) != vertex_count)
        throw config_error("twist matrix must be " +
                           std::to_string(vertex_count) + "x" +
                           std::to_string(vertex_count));
    return TwistForm(std::move(t));
}

TwistForm load_twist_file(const std::string& path, int vertex_count) {
    return twist_from_json(slurp(path), vertex_count);
}

std::string quad_to_json(const QuadNumber& x) {
    return quad_json(x).dump();
}

QuadNumber quad_from_json(const std::string& text, long q) {
    json j = parse(text, "coefficient");
    if (!j.is_object() || !j.contains("a") || !j.contains("b") ||
        !j["a"].is_string() || !j["b"].is_string())
        throw config_error("coefficient JSON needs string fields a, b");
    return QuadNumber(q, rational_from_string(j["a"].get<std::string>()),
                      rational_from_string(j["b"].get<std::string>()));
}

std::string catalog_to_json(const Catalog& catalog) {
    const Quiver& quiver = catalog.quiver();
    json j;
    j["quiver"]["vertices"] = quiver.vertex_count();
    j["quiver"]["arrows"] = json::array();
    for (const Arrow& a : quiver.arrows())
        j["quiver"]["arrows"].push_back({a.source, a.target});
    j["q"] = catalog.q();
    j["max_dim"] = catalog.max_total_dim();
    j["class_count"] = catalog.size();
    j["classes"] = json::array();
    for (int id = 0; id < catalog.size(); ++id) {
        const Representation& rep = catalog.rep(id);
        json c;
        c["id"] = id;
        c["dim"] = rep.dim.entries();
        c["matrices"] = json::array();
        for (const FpMatrix& m : rep.maps) c["matrices"].push_back(m.entries());
        j["classes"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

TableKind table_kind_from_name(const std::string& name) {
    if (name == "hall") return TableKind::hall;
    if (name == "delta") return TableKind::delta;
    if (name == "derived") return TableKind::derived;
    if (name == "ext") return TableKind::ext;
    if (name == "twisted") return TableKind::twisted;
    throw config_error("unknown table kind: " + name +
                       " (expected hall|delta|derived|ext|twisted)");
}

namespace {

const char* table_kind_name(TableKind k) {
    switch (k) {
        case TableKind::hall: return "hall";
        case TableKind::delta: return "delta";
        case TableKind::derived: return "derived";
        case TableKind::ext: return "ext";
        case TableKind::twisted: return "twisted";
    }
    return "?";
}

}  // namespace

std::string table_to_json(TableKind kind, const HallTables& tables,
                          const std::optional<TwistForm>& twist, int jobs) {
    const Catalog& cat = tables.catalog();
    const Quiver& quiver = cat.quiver();
    long q = cat.q();

    std::optional<TwistForm> phi;
    if (kind == TableKind::twisted)
        phi = twist ? *twist : TwistForm::semi_derived(quiver);

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < cat.size(); ++a)
        for (int b = 0; b < cat.size(); ++b)
            if (cat.total_dim(a) + cat.total_dim(b) <= cat.max_total_dim())
                pairs.emplace_back(a, b);

    // one slot per pair, filled in parallel, serialized in canonical order
    std::vector<std::vector<json>> slots(pairs.size());
    parallel_for(pairs.size(), jobs, [&](size_t idx) {
        auto [a, b] = pairs[idx];
        for (int m = 0; m < cat.size(); ++m) {
            QuadNumber coeff(q);
            switch (kind) {
                case TableKind::hall: {
                    Integer ext = tables.ext_count(a, b, m);
                    if (ext == 0) continue;
                    Rational c(ext);
                    c /= rational_qpow(q, tables.hom_dim(a, b));
                    coeff = QuadNumber(q, c, Rational(0));
                    break;
                }
                case TableKind::delta:
                    coeff = delta_hall_number(tables, a, b, m);
                    break;
                case TableKind::derived:
                    coeff = derived_hall_number(tables, a, b, m);
                    break;
                case TableKind::ext:
                    coeff = delta_hall_number(tables, a, b, m);
                    break;
                case TableKind::twisted: {
                    coeff = delta_hall_number(tables, a, b, m);
                    if (!coeff.is_zero()) {
                        long long e = phi->exponent(K0Class::of(cat.dim(a)),
                                                    K0Class::of(cat.dim(b)));
                        coeff = vpow(q, e) * coeff;
                    }
                    break;
                }
            }
            if (coeff.is_zero()) continue;
            json row;
            row["a"] = a;
            row["b"] = b;
            row["m"] = m;
            row["coeff"] = quad_json(coeff);
            if (kind == TableKind::ext || kind == TableKind::twisted) {
                std::vector<long long> kshift(quiver.vertex_count());
                for (int i = 0; i < quiver.vertex_count(); ++i)
                    kshift[i] = static_cast<long long>(cat.dim(a)[i]) +
                                cat.dim(b)[i] - cat.dim(m)[i];
                row["kshift"] = kshift;
            }
            slots[idx].push_back(std::move(row));
        }
    });

    json j;
    j["kind"] = table_kind_name(kind);
    j["q"] = q;
    j["max_dim"] = cat.max_total_dim();
    j["quiver"]["vertices"] = quiver.vertex_count();
    j["quiver"]["arrows"] = json::array();
    for (const Arrow& a : quiver.arrows())
        j["quiver"]["arrows"].push_back({a.source, a.target});
    if (phi) j["twist"] = phi->matrix();
    j["entries"] = json::array();
    for (auto& slot : slots)
        for (auto& row : slot) j["entries"].push_back(std::move(row));
    return j.dump(2) + "\n";
}

std::string report_to_json(const CheckReport& report,
                           const HallTables& tables) {
    const Catalog& cat = tables.catalog();
    json j;
    j["suite"] = report.suite;
    j["q"] = cat.q();
    j["max_dim"] = cat.max_total_dim();
    j["checked"] = report.checked;
    j["ok"] = report.ok();
    j["failures"] = json::array();
    for (const CheckFailure& f : report.failures)
        j["failures"].push_back(json{{"identity", f.identity},
                                     {"operands", f.operands},
                                     {"detail", f.detail}});
    j["notes"] = report.notes;
    if (!report.rank2_pairs.empty()) {
        j["pairs"] = json::array();
        for (const Rank2PairReport& p : report.rank2_pairs) {
            json pj;
            pj["i"] = p.i;
            pj["j"] = p.j;
            pj["n_ij"] = p.n_ij;
            pj["residual_zero"] = p.residual_zero;
            pj["lambda"] = p.lambda ? quad_json(*p.lambda) : json(nullptr);
            j["pairs"].push_back(std::move(pj));
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace deltahall
