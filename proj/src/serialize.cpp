#include "spreadcover/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spreadcover {

using nlohmann::json;

std::string cover_to_json(const CliqueCover& c) {
    json j;
    j["n"] = c.n;
    j["d"] = c.d;
    j["cliques"] = json::array();
    for (const auto& cl : c.cliques) j["cliques"].push_back(cl.base.exponents());
    return j.dump(2) + "\n";
}

CliqueCover cover_from_json(const std::string& text) {
    json j = json::parse(text);
    CliqueCover c;
    c.n = j.at("n").get<int>();
    c.d = j.at("d").get<int>();
    if (c.n < 1 || c.d < 1) throw std::invalid_argument("cover file requires n >= 1, d >= 1");
    for (const auto& arr : j.at("cliques")) {
        Monomial base(arr.get<std::vector<int>>());
        if (base.size() != c.n)
            throw std::invalid_argument("clique base length does not match n");
        if (base.degree() != c.d - 1)
            throw std::invalid_argument("clique base degree must be d-1");
        c.add(UpwardClique{std::move(base)}, CliqueOrigin::Greedy);
    }
    return c;
}

std::string alpha_result_to_json(const ExactAlphaResult& r) {
    json j;
    j["value"] = r.value;
    j["proven_optimal"] = r.proven_optimal;
    j["witness"] = json::array();
    for (const auto& m : r.witness) j["witness"].push_back(m.exponents());
    return j.dump(2) + "\n";
}

std::string rho_result_to_json(const ExactRhoResult& r) {
    json j;
    j["value"] = r.value;
    j["proven_optimal"] = r.proven_optimal;
    j["witness"] = json::array();
    for (const auto& cl : r.witness.cliques) j["witness"].push_back(cl.base.exponents());
    return j.dump(2) + "\n";
}

namespace {

const char* quantity_name(BoundQuantity q) {
    return q == BoundQuantity::Alpha ? "alpha" : "rho";
}

const char* kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::Lower: return "lower";
        case BoundKind::Upper: return "upper";
        case BoundKind::Exact: return "exact";
    }
    return "?";
}

} // namespace

std::string render_bound_report(const BoundReport& r, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json j;
        j["n"] = r.n;
        j["d"] = r.d;
        j["entries"] = json::array();
        for (const auto& e : r.entries) {
            j["entries"].push_back({{"quantity", quantity_name(e.quantity)},
                                    {"kind", kind_name(e.kind)},
                                    {"value", e.value},
                                    {"method", e.method},
                                    {"note", e.note}});
        }
        j["skipped"] = r.skipped;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "quantity,kind,value,method\n";
        for (const auto& e : r.entries) {
            out << quantity_name(e.quantity) << ',' << kind_name(e.kind) << ','
                << e.value << ',' << e.method << "\n";
        }
        return out.str();
    }
    out << "bounds for n=" << r.n << ", d=" << r.d << "\n";
    for (const auto& e : r.entries) {
        out << "  " << quantity_name(e.quantity) << " " << kind_name(e.kind) << " "
            << e.value << "  [" << e.method << "]";
        if (!e.note.empty()) out << "  (" << e.note << ")";
        out << "\n";
    }
    for (const auto& s : r.skipped) out << "  skipped: " << s << "\n";
    return out.str();
}

} // namespace spreadcover
