#pragma once

#include <string>

#include "qah/laws.hpp"
#include "qah/report.hpp"

namespace qah {

struct TaskOptions {
    std::optional<int> max_degree;   // overrides degree windows from the file
    std::size_t resource_cap = 100000;
};

inline json invariants_to_json(const HeartInvariants& t) {
    return json::array({t.w, t.h_null, t.h_quot});
}

namespace taskdetail {

template <field F>
GPairModule<F> load_module(const F& fld, GroupPtr grp, const json& tf, const std::string& name) {
    const auto& modules = require_key(tf, "modules", "task file");
    return module_from_json(fld, grp, require_key(modules, name, "modules"), "modules." + name);
}

inline std::pair<int, int> degree_window(const json& task, const TaskOptions& opts, int def_lo, int def_hi) {
    int lo = def_lo, hi = def_hi;
    if (task.contains("degrees")) {
        const auto& d = task["degrees"];
        if (!d.is_array() || d.size() != 2) throw parse_error("task.degrees must be [lo, hi]");
        lo = d[0].get<int>();
        hi = d[1].get<int>();
    }
    if (opts.max_degree) hi = std::min(hi, *opts.max_degree);
    if (hi < lo) throw validation_error("task: empty degree window");
    return {lo, hi};
}

template <field F>
json run_homology(const F& fld, const json& tf, const json& task, const TaskOptions& opts) {
    const auto& complexes = require_key(tf, "complexes", "task file");
    auto name = task.value("complex", std::string("C"));
    auto c = complex_from_json(fld, require_key(complexes, name, "complexes"), "complexes." + name);
    auto side = task.value("side", std::string("left"));
    auto [lo, hi] = degree_window(task, opts, c.lo(), c.hi());
    json results = json::array();
    for (int n = lo; n <= hi; ++n) {
        if (side == "left") {
            auto h = h_left(c, n);
            results.push_back(json{{"degree", n},
                                   {"invariants", invariants_to_json(heart_invariants(h))},
                                   {"q_dim", q_l(h).space.dim},
                                   {"q_null_dim", q_l(h).space.null.dim()}});
        } else if (side == "right") {
            auto h = h_right(c, n);
            results.push_back(json{{"degree", n},
                                   {"invariants", invariants_to_json(heart_invariants(h))},
                                   {"q_dim", q_r(h).space.dim},
                                   {"q_null_dim", q_r(h).space.null.dim()}});
        } else {
            throw validation_error("task.side must be 'left' or 'right'");
        }
    }
    return json{{"results", results}, {"pass", true}};
}

template <field F>
json run_l1(const F& fld, const json& tf, const json& task, const TaskOptions& opts, bool bounded) {
    auto grp = group_from_json(require_key(tf, "group", "task file"));
    auto m = load_module(fld, grp, tf, task.value("module", std::string("M")));
    auto [lo, hi] = degree_window(task, opts, 0, 3);
    if (lo < 0) throw validation_error("task: degrees must be nonnegative");
    json results = json::array();
    for (int n = lo; n <= hi; ++n) {
        if (bounded) {
            auto h = bounded_cohomology(m, n, opts.resource_cap);
            results.push_back(json{{"degree", n},
                                   {"invariants", invariants_to_json(heart_invariants(h))},
                                   {"q_dim", q_l(h).space.dim},
                                   {"q_null_dim", q_l(h).space.null.dim()}});
        } else {
            auto h = l1_homology(m, n, opts.resource_cap);
            results.push_back(json{{"degree", n},
                                   {"invariants", invariants_to_json(heart_invariants(h))},
                                   {"q_dim", q_r(h).space.dim},
                                   {"q_null_dim", q_r(h).space.null.dim()}});
        }
    }
    return json{{"results", results}, {"pass", true}};
}

template <field F>
json run_classical(const F& fld, const json& tf, const json& task, const TaskOptions& opts) {
    auto grp = group_from_json(require_key(tf, "group", "task file"));
    auto m = load_module(fld, grp, tf, task.value("module", std::string("M")));
    auto [lo, hi] = degree_window(task, opts, 0, 3);
    if (lo < 0) throw validation_error("task: degrees must be nonnegative");
    json results = json::array();
    json checks = json::array();
    bool pass = true;
    for (int n = lo; n <= hi; ++n) {
        auto cls = classical_l1(m, n, opts.resource_cap);
        auto hd = hausdorffified_l1(m, n, opts.resource_cap);
        auto h = l1_homology(m, n, opts.resource_cap);
        auto qr = q_r(h).space;
        results.push_back(json{{"degree", n},
                               {"classical_dim", cls.dim},
                               {"classical_null_dim", cls.null.dim()},
                               {"hausdorffified_dim", hd.dim}});
        bool ok = hausdorffification(qr).space.dim == hd.dim;
        auto c = inhomogeneous_chain(m, n + 1, opts.resource_cap);
        auto lad = homology_ladder(c.diff_at(-n - 1), c.diff_at(-n));
        auto w = compose(*pair_inverse(lad.ker_psi_to_x), lad.coker_phi_to_x);
        bool ok2 = is_pair_iso(w);
        checks.push_back(json{{"name", "Hd(q_r H) = Hd(classical) at degree " + std::to_string(n)},
                              {"pass", ok}});
        checks.push_back(json{{"name", "q_l H_l = q_r H_r at degree " + std::to_string(n)},
                              {"pass", ok2}});
        pass = pass && ok && ok2;
    }
    return json{{"results", results}, {"checks", checks}, {"pass", pass}};
}

template <field F>
json run_duality(const F& fld, const json& tf, const json& task, const TaskOptions& opts) {
    auto grp = group_from_json(require_key(tf, "group", "task file"));
    auto m = load_module(fld, grp, tf, task.value("module", std::string("M")));
    int max_degree = task.value("max_degree", 2);
    if (opts.max_degree) max_degree = std::min(max_degree, *opts.max_degree);
    auto rep = duality_check(m, max_degree, opts.resource_cap);
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
    return json{{"checks", checks}, {"pass", rep.pass()}};
}

template <field F>
json run_les(const F& fld, const json& tf, const json& task, const TaskOptions& opts) {
    auto grp = group_from_json(require_key(tf, "group", "task file"));
    const auto& maps = require_key(tf, "maps", "task file");
    auto iname = task.value("incl", std::string("i"));
    auto pname = task.value("proj", std::string("p"));
    const auto& ij = require_key(maps, iname, "maps");
    const auto& pj = require_key(maps, pname, "maps");
    auto a = load_module(fld, grp, tf, require_key(ij, "from", "maps." + iname).get<std::string>());
    auto b = load_module(fld, grp, tf, require_key(ij, "to", "maps." + iname).get<std::string>());
    auto c = load_module(fld, grp, tf, require_key(pj, "to", "maps." + pname).get<std::string>());
    auto incl = g_map(a, b, matrix_from_json(fld, require_key(ij, "matrix", "maps." + iname),
                                             "maps." + iname + ".matrix", b.space.dim, a.space.dim));
    auto proj = g_map(b, c, matrix_from_json(fld, require_key(pj, "matrix", "maps." + pname),
                                             "maps." + pname + ".matrix", c.space.dim, b.space.dim));
    int max_degree = task.value("max_degree", 2);
    if (opts.max_degree) max_degree = std::min(max_degree, *opts.max_degree);
    auto les = les_coefficients(incl, proj, max_degree, opts.resource_cap);

    json checks = json::array();
    for (std::size_t i = 0; i < les.left.node_exact.size(); ++i)
        checks.push_back(json{{"name", "LES exact at " + les.left.node_names[i]},
                              {"pass", static_cast<bool>(les.left.node_exact[i])}});
    json results = json::array();
    for (int n = 0; n <= max_degree; ++n) {
        std::size_t k = static_cast<std::size_t>(n);
        results.push_back(
            json{{"degree", n},
                 {"sub", invariants_to_json(heart_invariants(les.h_sub[k].direct))},
                 {"mid", invariants_to_json(heart_invariants(les.h_mid[k].direct))},
                 {"quot", invariants_to_json(heart_invariants(les.h_quot[k].direct))}});
    }
    auto hd = hausdorffified_les(les.left);
    json hd_json{{"dims", hd.dims}, {"exact", hd.exact()}};
    json hd_nodes = json::array();
    for (std::size_t i = 0; i < hd.exact_at.size(); ++i)
        hd_nodes.push_back(json{{"node", hd.labels[i + 1]}, {"exact", static_cast<bool>(hd.exact_at[i])}});
    hd_json["nodes"] = hd_nodes;
    return json{{"results", results},
                {"checks", checks},
                {"hausdorffified", hd_json},
                {"pass", les.exact()}};
}

} // namespace taskdetail

/// Execute a task file and return the report (without digest/timing).
inline json run_task_file(const json& tf, const TaskOptions& opts) {
    const auto& task = require_key(tf, "task", "task file");
    auto op = require_key(task, "op", "task").get<std::string>();
    auto fs = field_spec_from_json(require_key(tf, "field", "task file"));

    json body;
    if (op == "check") {
        auto outcome = run_check_task(tf, opts.resource_cap);
        body = json{{"checks", json::array({json{{"name", "law " + task.value("law", std::string("?")) },
                                                 {"pass", outcome.pass},
                                                 {"detail", outcome.detail}}})},
                    {"pass", outcome.pass}};
    } else {
        body = with_field(fs, [&](auto fld) -> json {
            if (op == "homology") return taskdetail::run_homology(fld, tf, task, opts);
            if (op == "l1-homology" || op == "group-homology")
                return taskdetail::run_l1(fld, tf, task, opts, false);
            if (op == "bounded-cohomology") return taskdetail::run_l1(fld, tf, task, opts, true);
            if (op == "classical") return taskdetail::run_classical(fld, tf, task, opts);
            if (op == "duality") return taskdetail::run_duality(fld, tf, task, opts);
            if (op == "les") return taskdetail::run_les(fld, tf, task, opts);
            throw validation_error("unknown task op: " + op);
        });
    }
    body["tool"] = tool_version;
    body["task"] = task;
    body["input_digest"] = "fnv1a:" + hex64(fnv1a64(tf.dump()));
    return body;
}

} // namespace qah
