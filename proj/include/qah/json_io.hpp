#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "qah/complexes.hpp"
#include "qah/groups.hpp"

namespace qah {

using nlohmann::json;

inline const json& require_key(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(where + ": missing key '" + key + "'");
    return *it;
}

inline FieldSpec field_spec_from_json(const json& j) {
    auto kind = require_key(j, "kind", "field").get<std::string>();
    if (kind == "rationals") return {FieldSpec::Kind::rationals, 0};
    if (kind == "prime") {
        auto p = require_key(j, "p", "field").get<std::uint64_t>();
        if (!is_prime_u64(p)) throw validation_error("field: p = " + std::to_string(p) + " is not prime");
        return {FieldSpec::Kind::prime, p};
    }
    throw parse_error("field: unknown kind '" + kind + "'");
}

inline json field_spec_to_json(const FieldSpec& fs) {
    if (fs.kind == FieldSpec::Kind::rationals) return json{{"kind", "rationals"}};
    return json{{"kind", "prime"}, {"p", fs.p}};
}

/// Dispatch a callable over the runtime field description.
template <typename Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::rationals) return fn(Rationals{});
    return fn(PrimeField(fs.p));
}

template <field F>
json matrix_to_json(const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.fld().to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <field F>
Matrix<F> matrix_from_json(const F& fld, const json& j, const std::string& where,
                           std::optional<std::size_t> rows = std::nullopt,
                           std::optional<std::size_t> cols = std::nullopt) {
    if (!j.is_array()) throw parse_error(where + ": matrix must be an array of rows");
    std::size_t r = j.size();
    if (rows && *rows != r)
        throw parse_error(where + ": expected " + std::to_string(*rows) + " rows, got " + std::to_string(r));
    std::size_t c = cols.value_or(r == 0 ? 0 : j[0].size());
    Matrix<F> m(fld, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != c)
            throw parse_error(where + ": row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < c; ++k) {
            if (!row[k].is_string())
                throw parse_error(where + ": entry (" + std::to_string(i) + "," + std::to_string(k) +
                                  ") must be a scalar string");
            try {
                m.at(i, k) = fld.parse(row[k].get<std::string>());
            } catch (const parse_error& e) {
                throw parse_error(where + ": entry (" + std::to_string(i) + "," + std::to_string(k) +
                                  "): " + e.what());
            }
        }
    }
    return m;
}

template <field F>
json pair_space_to_json(const PairSpace<F>& a) {
    return json{{"dim", a.dim}, {"null", matrix_to_json(a.null.basis())}};
}

template <field F>
PairSpace<F> pair_space_from_json(const F& fld, const json& j, const std::string& where) {
    auto dim = require_key(j, "dim", where).get<std::size_t>();
    auto null_rows = matrix_from_json(fld, require_key(j, "null", where), where + ".null",
                                      std::nullopt, dim);
    return PairSpace<F>(dim, Subspace<F>::span_of_rows(dim, null_rows));
}

template <field F>
json pair_map_to_json(const PairMap<F>& f) {
    return json{{"domain", pair_space_to_json(f.dom)},
                {"codomain", pair_space_to_json(f.cod)},
                {"matrix", matrix_to_json(f.mat)}};
}

template <field F>
PairMap<F> pair_map_from_json(const F& fld, const json& j, const std::string& where) {
    auto dom = pair_space_from_json(fld, require_key(j, "domain", where), where + ".domain");
    auto cod = pair_space_from_json(fld, require_key(j, "codomain", where), where + ".codomain");
    auto mat = matrix_from_json(fld, require_key(j, "matrix", where), where + ".matrix", cod.dim, dom.dim);
    return pair_map(std::move(dom), std::move(cod), std::move(mat));
}

template <field F>
json complex_to_json(const SnComplex<F>& c) {
    json objects = json::object();
    json diffs = json::object();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        objects[std::to_string(n)] = pair_space_to_json(c.object_at(n));
        if (n < c.hi()) diffs[std::to_string(n)] = matrix_to_json(c.diff_at(n).mat);
    }
    return json{{"degrees", json::array({c.lo(), c.hi()})}, {"objects", objects}, {"differentials", diffs}};
}

template <field F>
SnComplex<F> complex_from_json(const F& fld, const json& j, const std::string& where) {
    const auto& degrees = require_key(j, "degrees", where);
    if (!degrees.is_array() || degrees.size() != 2) throw parse_error(where + ": degrees must be [lo, hi]");
    int lo = degrees[0].get<int>(), hi = degrees[1].get<int>();
    if (hi < lo) throw parse_error(where + ": empty degree window");
    const auto& objects = require_key(j, "objects", where);
    std::vector<PairSpace<F>> objs;
    for (int n = lo; n <= hi; ++n)
        objs.push_back(pair_space_from_json(fld, require_key(objects, std::to_string(n), where + ".objects"),
                                            where + ".objects." + std::to_string(n)));
    const auto& diffs = require_key(j, "differentials", where);
    std::vector<PairMap<F>> ds;
    for (int n = lo; n < hi; ++n) {
        auto mat = matrix_from_json(fld, require_key(diffs, std::to_string(n), where + ".differentials"),
                                    where + ".differentials." + std::to_string(n),
                                    objs[static_cast<std::size_t>(n + 1 - lo)].dim,
                                    objs[static_cast<std::size_t>(n - lo)].dim);
        ds.push_back(pair_map(objs[static_cast<std::size_t>(n - lo)],
                              objs[static_cast<std::size_t>(n + 1 - lo)], std::move(mat)));
    }
    return SnComplex<F>(fld, lo, std::move(objs), std::move(ds));
}

inline json group_to_json(const FiniteGroup& g) {
    json names = json::array();
    for (std::uint32_t i = 0; i < g.order(); ++i) names.push_back(g.name(i));
    json table = json::array();
    for (const auto& row : g.table()) table.push_back(row);
    return json{{"elements", names}, {"table", table}};
}

inline GroupPtr group_from_json(const json& j) {
    const auto& elements = require_key(j, "elements", "group");
    const auto& table = require_key(j, "table", "group");
    std::vector<std::string> names;
    for (const auto& e : elements) names.push_back(e.get<std::string>());
    std::vector<std::vector<std::uint32_t>> t;
    for (const auto& row : table) t.push_back(row.get<std::vector<std::uint32_t>>());
    return std::make_shared<FiniteGroup>(std::move(names), std::move(t));
}

template <field F>
json module_to_json(const GPairModule<F>& m) {
    json action = json::object();
    for (std::uint32_t g = 0; g < m.group->order(); ++g)
        action[m.group->name(g)] = matrix_to_json(m.action[g]);
    return json{{"dim", m.space.dim},
                {"null", matrix_to_json(m.space.null.basis())},
                {"action", action}};
}

template <field F>
GPairModule<F> module_from_json(const F& fld, GroupPtr group, const json& j, const std::string& where) {
    auto dim = require_key(j, "dim", where).get<std::size_t>();
    auto null_rows = matrix_from_json(fld, require_key(j, "null", where), where + ".null",
                                      std::nullopt, dim);
    PairSpace<F> space(dim, Subspace<F>::span_of_rows(dim, null_rows));
    const auto& action = require_key(j, "action", where);
    std::vector<Matrix<F>> act;
    for (std::uint32_t g = 0; g < group->order(); ++g) {
        auto it = action.find(group->name(g));
        if (it == action.end())
            throw parse_error(where + ": missing action for element '" + group->name(g) + "'");
        act.push_back(matrix_from_json(fld, *it, where + ".action." + group->name(g), dim, dim));
    }
    return g_pair_module(std::move(group), std::move(space), std::move(act));
}

} // namespace qah
