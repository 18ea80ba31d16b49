#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "mpg/chains.hpp"
#include "mpg/coloring.hpp"
#include "mpg/domination.hpp"
#include "mpg/errors.hpp"
#include "mpg/report.hpp"
#include "mpg/structure.hpp"

namespace mpg {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
        case CheckStatus::Precondition: return "precondition";
    }
    return "?";
}

int SuiteReport::exit_code() const {
    return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; }) ? 1 : 0;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["schema"] = kReportSchemaVersion;
    j["version"] = version;
    j["params"] = {{"k", params.k}, {"l", params.ell}};
    j["suite"] = suite;
    j["seed"] = seed;
    auto& arr = j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json cj{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail},
                          {"witnesses", c.witnesses}, {"seconds", c.seconds}};
        if (c.truncated) cj["truncated"] = true;
        arr.push_back(std::move(cj));
    }
    j["pass"] = exit_code() == 0;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"domination", "coloring", "chi",    "cycles",
                                                "toroidal",   "chains",   "schreier", "pancake"};
    return names;
}

namespace {

nlohmann::json names_of(const Graph& g, const std::vector<VertexId>& vs) {
    auto out = nlohmann::json::array();
    for (auto v : vs) out.push_back(g.name(v));
    return out;
}

CheckStatus verdict(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

class Runner {
public:
    Runner(SuiteReport& report, const SuiteOptions& opts, std::string prefix)
        : report_(report), opts_(opts), prefix_(std::move(prefix)) {}

    void check(const std::string& name, const std::function<void(Check&)>& body) {
        Check c;
        c.name = prefix_ + "." + name;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const InstanceTooLarge& e) {
            c.status = CheckStatus::Skip;
            c.detail = std::string("cap: ") + e.what();
        } catch (const PreconditionError& e) {
            c.status = CheckStatus::Precondition;
            c.detail = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.witnesses.size() > opts_.witness_cap) {
            auto trimmed = nlohmann::json::array();
            for (std::size_t i = 0; i < opts_.witness_cap; ++i) trimmed.push_back(c.witnesses[i]);
            c.witnesses = std::move(trimmed);
            c.truncated = true;
        }
        report_.checks.push_back(std::move(c));
    }

    void skip(const std::string& name, const std::string& why, CheckStatus status = CheckStatus::Skip) {
        check(name, [&](Check& c) {
            c.status = status;
            c.detail = why;
        });
    }

    const SuiteOptions& opts() const { return opts_; }

private:
    SuiteReport& report_;
    const SuiteOptions& opts_;
    std::string prefix_;
};

void add_violations(Check& c, const Graph& g, const DominationCertificate& cert) {
    for (const auto& v : cert.violations)
        c.witnesses.push_back({{"kind", to_string(v.kind)}, {"vertices", names_of(g, v.vertices)}, {"detail", v.detail}});
    c.truncated = c.truncated || cert.truncated;
}

void add_violations(Check& c, const Graph& g, const ColoringReport& rep) {
    for (const auto& v : rep.witnesses)
        c.witnesses.push_back({{"kind", v.kind}, {"vertices", names_of(g, v.vertices)}, {"detail", v.detail}});
    c.truncated = c.truncated || rep.truncated;
}

struct Context {
    const PermGraph& g;
    Runner& run;
};

void domination_suite(const Context& cx) {
    const auto& g = cx.g;
    const auto& p = g.params;
    if (p.k == 2 && p.ell == 1) {
        cx.run.skip("hypothesis", "ST_2^1 excluded: girth <= 3", CheckStatus::Precondition);
        return;
    }
    cx.run.check("girth", [&](Check& c) {
        const int gi = girth(g.graph, 3);
        c.status = verdict(gi > 3);
        c.detail = gi == kInfiniteGirth ? "acyclic" : "girth " + std::to_string(gi);
    });
    std::vector<std::pair<VertexSet, int>> constructed;
    for (int i = 0; i < p.k; ++i)
        cx.run.check("se_set." + std::to_string(i), [&](Check& c) {
            const auto s = se_set(g, i);
            const auto cert = verify_efficient_domination(g.graph, s, p.ell, cx.run.opts().witness_cap);
            c.status = verdict(cert.pass);
            c.detail = std::to_string(s.size()) + " members";
            add_violations(c, g.graph, cert);
            constructed.emplace_back(s, p.ell);
        });
    cx.run.check("se_partition", [&](Check& c) {
        const auto r = verify_partition_and_edge_cover(g, SetFamily::SE);
        c.status = verdict(r.pass());
        c.detail = "membership " + std::to_string(r.membership_histogram.begin()->first) + ", expected " +
                   std::to_string(r.expected_membership);
    });
    if (p.ell == 2) {
        for (int i = 1; i < p.length(); ++i)
            cx.run.check("sigma_set." + std::to_string(i), [&](Check& c) {
                const auto s = sigma_set(g, i);
                const auto cert = verify_efficient_domination(g.graph, s, 1, cx.run.opts().witness_cap);
                const int d = cert.min_internal_distance.value_or(kInfiniteGirth);
                c.status = verdict(cert.pass && d == 3);
                c.detail = std::to_string(s.size()) + " members, min distance " + std::to_string(d);
                add_violations(c, g.graph, cert);
                constructed.emplace_back(s, 1);
            });
        cx.run.check("sigma_partition", [&](Check& c) {
            const auto r = verify_partition_and_edge_cover(g, SetFamily::Sigma);
            c.status = verdict(r.pass());
        });
    }
    if (g.order() <= 90) {
        cx.run.check("oracle_recheck", [&](Check& c) {
            bool ok = true;
            for (const auto& [s, ell] : constructed)
                if (!oracle::is_efficient_dominating(g.graph, s, ell)) {
                    ok = false;
                    c.witnesses.push_back(names_of(g.graph, s));
                }
            c.status = verdict(ok);
            c.detail = std::to_string(constructed.size()) + " sets";
        });
    } else {
        cx.run.skip("oracle_recheck", "oracle path runs on graphs with at most 90 vertices");
    }
}

void coloring_suite(const Context& cx) {
    const auto& g = cx.g;
    const auto& p = g.params;
    cx.run.check("positional_edge", [&](Check& c) {
        TotalColoring tc;
        tc.edge = positional_edge_coloring(g);
        tc.vertex.assign(g.order(), 0);
        const auto r = verify_coloring(g.graph, tc, ColoringMode::ProperEdge, cx.run.opts().witness_cap);
        c.status = verdict(r.passed());
        add_violations(c, g.graph, r);
    });
    if (p.ell == 2) {
        cx.run.check("sigma_efficient", [&](Check& c) {
            const auto tc = sigma_total_coloring(g);
            const auto r = verify_coloring(g.graph, tc, ColoringMode::Efficient, cx.run.opts().witness_cap);
            c.status = verdict(r.passed() && tc.palette.size() == static_cast<std::size_t>(2 * p.k - 1));
            c.detail = std::to_string(tc.palette.size()) + " colours";
            add_violations(c, g.graph, r);
        });
        cx.run.check("ei_avoidance", [&](Check& c) {
            const auto r = verify_ei_avoidance(g, sigma_total_coloring(g));
            c.status = verdict(r.pass());
            for (const auto& [color, e] : r.offending)
                c.witnesses.push_back({{"color", color}, {"edge", names_of(g.graph, {g.graph.edge(e).u, g.graph.edge(e).v})}});
        });
    } else {
        cx.run.skip("sigma_efficient", "sigma colouring needs l = 2");
    }
    if (p.ell >= 2) {
        cx.run.check("choosability", [&](Check& c) {
            const auto lo = choosability_suite(g, [](VertexId, const std::vector<int>& l) { return l.front(); });
            const auto hi = choosability_suite(g, [](VertexId, const std::vector<int>& l) { return l.back(); });
            c.status = verdict(lo.lists_disjoint && lo.proper && hi.proper);
            if (lo.overlapping_edge) {
                const auto& e = g.graph.edge(*lo.overlapping_edge);
                c.witnesses.push_back(names_of(g.graph, {e.u, e.v}));
            }
        });
    }
    if (p.ell >= 3) {
        cx.run.check("efficiency_obstruction", [&](Check& c) {
            const auto r = efficiency_obstruction_witness(g, g.vertex(0));
            c.status = verdict(r.pass);
            c.detail = std::string(r.exhaustive_enumeration ? "enumerated " : "backtracked ") +
                       std::to_string(r.selections) + " selections at " + g.vertex(0).str() + "; " +
                       std::to_string(r.same_first_at_distance_two) + " same-first vertices at distance 2, quoted count " +
                       std::to_string(r.pigeonhole_count);
            for (const auto& [a, b] : r.sample_witnesses) c.witnesses.push_back(names_of(g.graph, {a, b}));
        });
    }
    cx.run.check("k5_example", [&](Check& c) {
        const auto [k5, tc] = build_odd_complete_colored(2);
        const auto r = verify_coloring(k5, tc, ColoringMode::Efficient, cx.run.opts().witness_cap);
        c.status = verdict(r.passed());
        add_violations(c, k5, r);
    });
}

void chi_suite(const Context& cx) {
    const auto& g = cx.g;
    const auto& p = g.params;
    if (p.ell != 2) {
        cx.run.skip("hypothesis", "requires l = 2", CheckStatus::Precondition);
        return;
    }
    const auto tc = sigma_total_coloring(g);
    if (p.k == 2) {
        cx.run.check("augmentation", [&](Check& c) {
            const auto a = augment_supergraph(g.graph, tc, {se_set(g, 0), se_set(g, 1)}, 2);
            const bool cube = isomorphism(a.graph, hypercube(3)).has_value();
            c.status = verdict(a.pass() && cube);
            c.detail = std::string(cube ? "isomorphic to Q_3" : "not isomorphic to Q_3") +
                       (a.extension_exists ? ", efficient extension found" : ", no efficient extension");
        });
    }
    std::optional<PermGraph> reference;
    if (p.k >= 2) reference = build_graph(Params{p.k - 1, 2}, GeneratorFamily::star());
    const std::size_t expected = static_cast<std::size_t>(p.k) << (p.k - 1);
    ChiReport rep;
    cx.run.check("hypothesis", [&](Check& c) {
        rep = theorem_chi_suite(g.graph, tc, reference ? &reference->graph : nullptr, expected);
        c.status = rep.hypothesis ? CheckStatus::Pass : CheckStatus::Precondition;
        c.detail = rep.hypothesis ? "h = " + std::to_string(rep.h) : rep.hypothesis_detail;
    });
    if (!rep.hypothesis) return;
    cx.run.check("item1_connected_regular", [&](Check& c) {
        if (rep.h <= 4) {
            c.status = CheckStatus::Skip;
            c.detail = "item 1 needs h > 4";
            return;
        }
        bool ok = true;
        for (const auto& it : rep.items)
            if (!*it.removed_connected || !*it.removed_regular) {
                ok = false;
                c.witnesses.push_back({{"color", it.color}});
            }
        c.status = verdict(ok);
    });
    cx.run.check("item2_components", [&](Check& c) {
        bool ok = true;
        for (const auto& it : rep.items) {
            if (!it.components_ok) {
                ok = false;
                c.witnesses.push_back({{"color", it.color}});
            }
        }
        const auto& first = rep.items.front();
        std::size_t efficient = 0;
        for (const auto& comp : first.components) efficient += comp.efficient;
        c.status = verdict(ok);
        c.detail = std::to_string(first.components.size()) + " components of " +
                   std::to_string(first.components.front().vertices) + " vertices per colour; " + std::to_string(efficient) +
                   " efficiently coloured";
    });
    cx.run.check("component_count", [&](Check& c) {
        c.status = verdict(rep.component_count_ok);
        c.detail = "expected k*2^(k-1) = " + std::to_string(expected);
        for (const auto& it : rep.items)
            c.witnesses.push_back({{"color", it.color}, {"components", it.components.size()}});
    });
    cx.run.check("item3_biregular_odd_walk", [&](Check& c) {
        bool ok = true;
        for (const auto& it : rep.items) {
            const bool item_ok = it.biregular && it.high_side_is_class && it.class_independent && it.odd_walk;
            ok = ok && item_ok;
            if (!item_ok) c.witnesses.push_back({{"color", it.color}});
        }
        c.status = verdict(ok);
        if (ok) c.detail = "odd walk of length " + std::to_string(rep.items.front().odd_walk->size() - 1);
    });
}

void cycles_suite(const Context& cx) {
    const auto& g = cx.g;
    if (g.params.ell != 2) {
        cx.run.skip("census", "requires l = 2", CheckStatus::Precondition);
        return;
    }
    const auto tc = sigma_total_coloring(g);
    SixCycleCensus census;
    cx.run.check("census", [&](Check& c) {
        census = classify_six_cycles(g.graph, tc);
        c.status = verdict(census.other == 0);
        c.detail = std::to_string(census.cycles.size()) + " cycles: " + std::to_string(census.type1) + " type1, " +
                   std::to_string(census.type2) + " type2, " + std::to_string(census.other) + " other";
        for (const auto& cl : census.cycles)
            if (cl.type == SixCycleType::Other) c.witnesses.push_back(names_of(g.graph, {cl.cycle.begin(), cl.cycle.end()}));
    });
    if (g.params.k == 3)
        cx.run.check("cycle_234", [&](Check& c) {
            const auto hit = census.find(SixCycleType::Type1, {2, 3, 4});
            c.status = verdict(hit.has_value());
            if (hit) c.witnesses.push_back(names_of(g.graph, {hit->cycle.begin(), hit->cycle.end()}));
        });
}

void toroidal_suite(const Context& cx) {
    const auto& g = cx.g;
    if (g.params.ell != 2 || g.params.k < 3) {
        cx.run.skip("assembly", "requires l = 2 and k >= 3", CheckStatus::Precondition);
        return;
    }
    const auto tc = sigma_total_coloring(g);
    const int d1 = 2 * g.params.k - 1;
    ToroidalAudit a;
    cx.run.check("a_type1_disjoint", [&](Check& c) {
        a = toroidal_assembly(g, tc, d1, {1, 2, 3, 4});
        c.status = verdict(!a.type1.empty() && a.type1_disjoint);
        c.detail = "T_" + std::to_string(d1) + "(1,2,3,4): " + std::to_string(a.type2_cycles) + " type2 cycles, " +
                   std::to_string(a.type1.size()) + " type1 cycles";
    });
    cx.run.check("b_departing_edges", [&](Check& c) {
        c.status = verdict(a.departing_ok);
        std::map<int, std::size_t> landing_colors;
        for (const auto& t : a.type1)
            if (!t.landings.empty()) ++landing_colors[tc.vertex[t.landings.front()]];
        c.detail = "type1 cycles by landing colour:";
        for (const auto& [color, n] : landing_colors) c.detail += " " + std::to_string(color) + "x" + std::to_string(n);
        for (const auto& t : a.type1)
            if (!t.six_departing || !t.landings_in_sigma)
                c.witnesses.push_back(names_of(g.graph, {t.cycle.cycle.begin(), t.cycle.cycle.end()}));
    });
    cx.run.check("c_sigma_shape", [&](Check& c) {
        if (!a.sigma_shape_ok) {
            c.status = CheckStatus::Skip;
            c.detail = "evaluated for k = 3 only";
            return;
        }
        c.status = verdict(*a.sigma_shape_ok);
        std::string degrees;
        for (const auto& [d, count] : a.sigma_degrees) degrees += " " + std::to_string(count) + "x" + std::to_string(d);
        c.detail = "one edge per colour layer; total degrees:" + degrees;
    });
    cx.run.check("d_landing_distance", [&](Check& c) {
        c.status = verdict(a.distance_ok);
        std::map<int, std::size_t> profile;
        for (const auto& t : a.type1)
            for (const auto& [d, n] : t.distance_profile) profile[d] += n;
        for (const auto& [d, n] : profile) c.witnesses.push_back({{"distance", d}, {"pairs", n}});
        c.detail = "minimum landing distance 3 around every type1 cycle";
    });
}

void chains_suite(const Context& cx) {
    const auto& p = cx.g.params;
    if (p.ell != 2) {
        cx.run.skip("verify_chain", "requires l = 2", CheckStatus::Precondition);
        return;
    }
    if (p.k > 3) {
        cx.run.skip("verify_chain", "target ST(k+1,2) above the chain cap (k <= 3)");
        return;
    }
    ChainReport r;
    cx.run.check("a_disjoint_induced_images", [&](Check& c) {
        r = verify_chain(p.k);
        c.status = verdict(r.images_disjoint && r.images_induced_isomorphic);
        c.detail = std::to_string(r.images.size()) + " images of " + std::to_string(r.images.front().size()) + " vertices";
    });
    cx.run.check("b_sigma_bijection", [&](Check& c) {
        c.status = verdict(r.sigma_bijection && r.blocks_partition);
        c.detail = "full-neighbourhood reading " + std::string(r.full_reading_equals_sigma ? "holds" : "fails") + " (" +
                   std::to_string(r.full_neighbourhood_union) + " vertices); sigma-restricted reading " +
                   (r.restricted_reading_equals_sigma ? "holds" : "fails");
    });
    cx.run.check("c_cardinality", [&](Check& c) {
        c.status = verdict(r.sigma_size == r.expected_sigma_size);
        c.detail = std::to_string(r.sigma_size) + " = " + std::to_string(r.expected_sigma_size);
    });
    cx.run.check("thick", [&](Check& c) {
        c.status = verdict(r.thick);
        c.detail = "density " + std::to_string(r.sigma_density);
    });
}

void schreier_suite(const Context& cx) {
    const auto& p = cx.g.params;
    if (p.length() > 8) {
        cx.run.skip("quotient", "Sym_{kl} limited to kl <= 8");
        return;
    }
    cx.run.check("quotient", [&](Check& c) {
        const auto r = schreier_quotient_check(p.k, p.ell);
        c.status = verdict(r.pass());
        c.detail = std::to_string(r.table.classes.size()) + " fibers of size " + std::to_string(r.fiber_size);
        if (p.length() <= 4) c.witnesses.push_back(format_coset_table(r.table));
    });
}

void pancake_suite(const Context& cx) {
    const auto& p = cx.g.params;
    if (p.ell != 2 || p.k < 2 || p.k > 4) {
        cx.run.skip("chain", "requires l = 2 and 2 <= k <= 4", CheckStatus::Precondition);
        return;
    }
    // `gated`: the Sigma_i failures and the regular removal are asserted for the pancake family only.
    auto report = [&](const std::string& name, const GeneratorFamily& family, bool gated) {
        PancakeReport r;
        cx.run.check(name + ".last_sigma_eset", [&](Check& c) {
            r = pancake_chain_check(p.k, family);
            c.status = verdict(r.last.pass);
            add_violations(c, cx.g.graph, r.last);
        });
        cx.run.check(name + ".other_sigma_fail", [&](Check& c) {
            c.status = gated ? verdict(r.others_fail_with_witness) : CheckStatus::Skip;
            if (!gated) c.detail = "reported only";
            const auto pc = build_graph(p, family);
            for (const auto& [i, cert] : r.others) {
                nlohmann::json w{{"sigma", i}, {"pass", cert.pass}};
                if (!cert.violations.empty()) {
                    w["kind"] = to_string(cert.violations.front().kind);
                    w["vertices"] = names_of(pc.graph, cert.violations.front().vertices);
                }
                c.witnesses.push_back(std::move(w));
            }
        });
        cx.run.check(name + ".removal", [&](Check& c) {
            c.status = gated ? verdict(r.removal_regular && r.neighbourhoods_partition) : CheckStatus::Skip;
            std::string degrees, sizes;
            for (const auto& [d, n] : r.removal_degrees) degrees += " " + std::to_string(n) + "x" + std::to_string(d);
            for (auto s : r.residual_component_sizes) sizes += " " + std::to_string(s);
            c.detail = (gated ? "" : "reported only; ") + std::string("degrees after removal:") + degrees +
                       "; residual components:" + sizes;
        });
    };
    report("pc", GeneratorFamily::pancake(), true);
    if (p.k == 3) report("custom", GeneratorFamily::custom({{}, {}, {}, {{1, 2}}, {}, {}}), false);
}

using SuiteFn = void (*)(const Context&);

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> table{
        {"domination", domination_suite}, {"coloring", coloring_suite}, {"chi", chi_suite},
        {"cycles", cycles_suite},         {"toroidal", toroidal_suite}, {"chains", chains_suite},
        {"schreier", schreier_suite},     {"pancake", pancake_suite}};
    return table;
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const SuiteOptions& opts) {
    if (suite != "all" && !suite_table().count(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
    SuiteReport report;
    report.params = opts.input ? opts.input->params : opts.params;
    report.suite = suite;
    report.seed = opts.seed;
    report.params.validate();

    std::optional<PermGraph> built;
    if (!opts.input) {
        check_cap(report.params);
        built = build_graph(report.params, GeneratorFamily::star());
    }
    const PermGraph& g = opts.input ? *opts.input : *built;

    for (const auto& name : suite_names()) {
        if (suite != "all" && suite != name) continue;
        Runner runner(report, opts, name);
        suite_table().at(name)(Context{g, runner});
    }
    return report;
}

}  // namespace mpg
