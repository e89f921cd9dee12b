#include "hodgepsh/json_io.hpp"

#include "hodgepsh/errors.hpp"

#include <cmath>

namespace hodgepsh {

namespace {

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string(what) + ": " + e.what());
    } catch (const InvalidInput&) {
        throw;
    } catch (const Error& e) {
        // bad kind, Hodge number or inconsistent data: all input problems here
        throw InvalidInput(std::string(what) + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json complex_to_json(cd z) { return Json::array({z.real(), z.imag()}); }

cd complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidInput("complex numbers are written as [re, im]");
    const cd z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidInput("non-finite coefficient");
    return z;
}

Json coeffs_to_json(const std::vector<cd>& c) {
    Json a = Json::array();
    for (const auto& z : c) a.push_back(complex_to_json(z));
    return a;
}

std::vector<cd> coeffs_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InvalidInput("coefficient lists are non-empty arrays of [re, im]");
    std::vector<cd> out;
    for (const auto& z : j) out.push_back(complex_from_json(z));
    return out;
}

Json disc_to_json(const HorizontalDisc& disc) {
    Json j;
    j["type"] = kind_name(disc.kind);
    j["h"] = disc.h;
    j["tangency"] = disc.tangency;
    if (disc.frozen) j["frozenT1"] = complex_to_json(disc.frozenT1);
    Json free = Json::object();
    for (const auto& fe : free_entries(disc.kind, disc.h)) free[fe.name] = coeffs_to_json(disc.freeEntries.at(fe.name));
    j["free"] = std::move(free);
    Json consts = Json::object();
    for (const auto& [k, v] : disc.constants) consts[k] = complex_to_json(v);
    j["constants"] = std::move(consts);
    Json dep = Json::object();
    for (const auto& [k, v] : disc.dependentEntries) dep[k] = coeffs_to_json(v);
    j["dependent"] = std::move(dep);
    j["seed"] = disc.seed;
    j["degree"] = disc.degree;
    j["bound"] = disc.bound;
    j["anchored"] = disc.anchored;
    j["fibre"] = disc.fibre;
    return j;
}

HorizontalDisc disc_from_json(const Json& j) {
    return guarded("disc", [&] {
        HorizontalDisc d;
        d.kind = parse_kind(field(j, "type").get<std::string>());
        d.h = field(j, "h").get<int>();
        if (d.kind == Kind::Interior) throw InvalidInput("the interior model has no boundary chart");
        if (d.h < minimum_h(d.kind) || d.h > 64) throw InvalidInput("h out of range");
        d.tangency = field(j, "tangency").get<int>();
        if (d.tangency < 0 || d.tangency > 8) throw InvalidInput("tangency out of range");
        if (j.contains("frozenT1")) {
            d.frozen = true;
            d.frozenT1 = complex_from_json(j.at("frozenT1"));
        }
        const Json& free = field(j, "free");
        if (!free.is_object()) throw InvalidInput("'free' must be an object");
        for (const auto& fe : free_entries(d.kind, d.h)) {
            if (!free.contains(fe.name)) throw InvalidInput("missing free entry " + fe.name);
            d.freeEntries[fe.name] = coeffs_from_json(free.at(fe.name));
            if (d.freeEntries[fe.name].size() > 9) throw InvalidInput("degree above 8 in " + fe.name);
        }
        if (free.size() != d.freeEntries.size()) throw InvalidInput("unexpected entries in 'free'");
        const Json& consts = field(j, "constants");
        const std::string cname = integration_constant_name(d.kind, d.h);
        if (!consts.is_object() || !consts.contains(cname)) throw InvalidInput("missing constant " + cname);
        d.constants[cname] = complex_from_json(consts.at(cname));
        if (j.contains("seed")) d.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("degree")) d.degree = j.at("degree").get<int>();
        if (j.contains("bound")) d.bound = j.at("bound").get<double>();
        if (j.contains("anchored")) d.anchored = j.at("anchored").get<bool>();
        if (j.contains("fibre")) d.fibre = j.at("fibre").get<bool>();
        solve(d);
        const Residuals r = residuals(d);
        if (!(std::max(r.hr, r.ipr) <= 1e-12)) throw InvalidInput("disc violates the horizontality relations");
        return d;
    });
}

Json diamond_to_json(const DiamondTable& table) {
    Json j;
    j["space"] = space_name(table.space);
    j["shift"] = table.shift;
    Json entries = Json::array();
    for (const auto& [pq, dim] : table.entries) entries.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", dim}});
    j["entries"] = std::move(entries);
    Json markers = Json::object();
    for (const auto& [name, pq] : table.markers) markers[name] = Json::array({pq.first, pq.second});
    j["markers"] = std::move(markers);
    j["m"] = table.mLabel;
    return j;
}

}  // namespace hodgepsh
