#include "cli/commands.hpp"

#include "cli/report.hpp"

#include "resonance/closed_forms.hpp"
#include "resonance/errors.hpp"
#include "resonance/instance.hpp"
#include "resonance/koszul.hpp"
#include "resonance/parallel.hpp"
#include "resonance/raag.hpp"
#include "resonance/resonance.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <optional>

namespace resonance::cli {

namespace {

struct Common {
    bool json = false;
    bool csv = false;
    bool exact = false;
    bool modular = false;
    bool force = false;
    bool timing = false;
    bool validate = false;

    Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Human; }
    EngineOptions engine() const { return EngineOptions{exact ? RankMode::Exact : RankMode::Modular, force}; }
    const char* mode_name() const { return exact ? "exact" : "modular"; }
};

void add_common(CLI::App* sub, Common& c) {
    auto* json = sub->add_flag("--json", c.json, "JSON output");
    auto* csv = sub->add_flag("--csv", c.csv, "CSV output");
    json->excludes(csv);
    auto* exact = sub->add_flag("--exact", c.exact, "Exact integer ranks");
    auto* modular = sub->add_flag("--modular", c.modular, "Two-prime modular ranks with exact fallback (default)");
    exact->excludes(modular);
    sub->add_flag("--force", c.force, "Override size guards");
    sub->add_flag("--timing", c.timing, "Report elapsed time on stderr");
    sub->add_flag("--validate", c.validate, "Check that components lie in the resonance variety");
}

std::string vector_text(const RationalVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const bool neg = v[i] < 0;
        const Rational mag = neg ? Rational(-v[i]) : v[i];
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (mag != 1) s += to_string(mag) + "*";
        s += "e" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::string form_text(const Bivector& b) {
    std::string s;
    const auto prs = pairs(b.n);
    for (std::size_t p = 0; p < prs.size(); ++p) {
        const Rational& c = b.coords[p];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (mag != 1) s += to_string(mag) + "*";
        s += "e" + std::to_string(prs[p][0] + 1) + "^e" + std::to_string(prs[p][1] + 1);
    }
    return s.empty() ? "0" : s;
}

std::string component_text(const SubspaceSpec& comp) {
    std::string s = "<";
    for (std::size_t i = 0; i < comp.dim(); ++i) s += (i ? ", " : "") + vector_text(comp[i]);
    return s + ">";
}

std::string vertex_text(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

Value optional_form(const std::optional<Bivector>& b) { return b ? Value(form_text(*b)) : Value(nullptr); }

Value polys_value(const std::vector<MultiPoly>& polys) {
    Value arr = Value::array();
    for (const auto& p : polys) arr.push_back(p.to_string());
    return arr;
}

void describe_instance(Report& r, const Instance& inst) {
    r.field("instance", inst.digest);
    r.field("dim", inst.spec.n());
    r.field("dim_K", inst.spec.k_dim());
    r.field("dim_Kperp", inst.spec.kperp_dim());
}

std::vector<SubspaceSpec> gather_components(const Instance& inst, const std::vector<std::string>& flags,
                                            const Common& c) {
    std::vector<SubspaceSpec> comps;
    if (flags.empty()) comps = inst.components;
    for (const auto& f : flags) comps.push_back(parse_component(inst.spec.n(), f));
    if (c.validate) {
        for (std::size_t t = 0; t < comps.size(); ++t)
            if (!component_in_resonance(inst.spec, comps[t]))
                throw ParseError("component " + std::to_string(t + 1) + " is not contained in R(V,K)");
    }
    return comps;
}

// --- hilbert --------------------------------------------------------------

struct HilbertArgs {
    Common common;
    std::string input;
    std::size_t q_max = 4;
};

int cmd_hilbert(const HilbertArgs& a, Report& r) {
    const Instance inst = load_instance(a.input);
    describe_instance(r, inst);
    r.field("mode", a.common.mode_name());
    cli_degree_guard(inst.spec.n(), a.q_max, a.common.force);
    for (std::size_t q = 0; q <= a.q_max; ++q) check_degree_guard(inst.spec.n(), q, a.common.force);

    std::vector<HilbertRow> rows(a.q_max + 1);
    const EngineOptions opts = a.common.engine();
    parallel_for(2 * rows.size(), [&](std::size_t i) {
        const std::size_t q = i / 2;
        rows[q].q = q;
        if (i % 2 == 0) rows[q].dim_homology = wq_dim_homology(inst.spec, q, opts);
        else rows[q].dim_cokernel = wq_dim_cokernel(inst.spec, q, opts);
    });
    Table& t = r.table("hilbert", {"q", "homology", "cokernel", "agree"});
    bool ok = true;
    for (const auto& row : rows) {
        const bool agree = row.dim_homology == row.dim_cokernel;
        ok = ok && agree;
        t.rows.push_back({row.q, row.dim_homology, row.dim_cokernel, agree});
    }
    if (!ok) r.notes.push_back("homology and cokernel routes disagree");
    return ok ? kExitOk : kExitCrossCheck;
}

// --- check ----------------------------------------------------------------

struct CheckArgs {
    Common common;
    std::string input;
    std::vector<std::string> components;
    std::optional<std::size_t> q_max;
};

int cmd_check(const CheckArgs& a, Report& r) {
    const Instance inst = load_instance(a.input);
    describe_instance(r, inst);
    const auto comps = gather_components(inst, a.components, a.common);
    if (comps.empty()) throw ParseError("check: no component given (use --component or an instance with components)");

    struct Row {
        std::optional<Bivector> iso_witness, sep_witness, pm_witness, mu_witness;
        bool separable_pm = false, strongly = false;
        std::size_t kbar = 0;
    };
    std::vector<Row> rows(comps.size());
    parallel_for(comps.size(), [&](std::size_t t) {
        Row& row = rows[t];
        row.iso_witness = isotropy_witness(inst.spec, comps[t]);
        row.sep_witness = separability_witness(inst.spec, comps[t]);
        row.separable_pm = check_separable_pm(inst.spec, comps[t], &row.pm_witness);
        row.strongly = check_strongly_isotropic(inst.spec, comps[t], &row.mu_witness);
        row.kbar = project_component(inst.spec, comps[t]).k_dim();
    });

    bool ok = true;
    bool all_separable = true;
    Table& t = r.table("components", {"component", "subspace", "isotropic", "separable", "separable_pm",
                                      "strongly_isotropic", "dim_Kbar", "agree"});
    Table& w = r.table("witnesses", {"component", "isotropy", "separability", "multiplication"});
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const Row& row = rows[i];
        const bool iso = !row.iso_witness;
        const bool sep = !row.sep_witness;
        const bool agree = sep == row.separable_pm && row.strongly == (iso && sep) && iso == (row.kbar == 0);
        ok = ok && agree;
        all_separable = all_separable && sep;
        t.rows.push_back({i + 1, component_text(comps[i]), iso, sep, row.separable_pm, row.strongly, row.kbar, agree});
        w.rows.push_back({i + 1, optional_form(row.iso_witness), optional_form(row.sep_witness ? row.sep_witness : row.pm_witness),
                          optional_form(iso ? row.mu_witness : std::optional<Bivector>{})});
    }
    if (!ok) r.notes.push_back("component checks disagree between routes");

    if (a.q_max) {
        if (!all_separable) {
            r.notes.push_back("decomposition refused: not every component is separable");
        } else {
            cli_degree_guard(inst.spec.n(), *a.q_max, a.common.force);
            const auto dec = verify_decomposition(inst.spec, comps, *a.q_max, a.common.engine());
            Table& d = r.table("decomposition", {"q", "dim_W", "parts", "sum", "agree"});
            for (const auto& row : dec.rows) {
                Value parts = Value::array();
                for (auto p : row.parts) parts.push_back(p);
                d.rows.push_back({row.q, row.total, parts, row.sum, row.agrees()});
            }
            r.field("first_agreement_q", dec.first_agreement_q ? Value(*dec.first_agreement_q) : Value(nullptr));
            r.field("pairwise_disjoint", dec.pairwise_disjoint);
        }
    }
    return ok ? kExitOk : kExitCrossCheck;
}

// --- raag -----------------------------------------------------------------

struct RaagArgs {
    Common common;
    std::string graph;
    std::size_t q_max = 3;
    bool theta = false;
};

int cmd_raag(const RaagArgs& a, Report& r) {
    const GraphFile file = load_graph(a.graph);
    const Graph& g = file.graph;
    r.field("graph", file.digest);
    r.field("vertices", g.n());
    r.field("edges", g.edges().size());
    r.field("mode", a.common.mode_name());
    cli_degree_guard(g.n(), a.q_max, a.common.force);
    for (std::size_t q = 0; q <= a.q_max; ++q) check_degree_guard(g.n(), q, a.common.force);

    const PairSpec spec = graph_to_pairspec(g);
    const auto comps = resonance_components(g, a.common.force).components;
    bool ok = true;

    Table& ct = r.table("components", {"component", "vertices", "isotropic", "isotropic_generic", "separable",
                                       "separable_generic", "strongly_isotropic", "agree"});
    std::vector<SubspaceSpec> subspaces;
    bool all_separable = true;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const SubspaceSpec sub = vertex_subspace(g, comps[i]);
        subspaces.push_back(sub);
        const bool iso = component_is_isotropic(g, comps[i]);
        const bool sep = component_is_separable(g, comps[i]);
        const bool iso_gen = check_isotropic(spec, sub);
        const bool sep_gen = check_separable(spec, sub);
        const bool strongly = check_strongly_isotropic(spec, sub);
        const bool agree = iso == iso_gen && sep == sep_gen && strongly == (iso && sep);
        ok = ok && agree;
        all_separable = all_separable && sep;
        ct.rows.push_back({i + 1, vertex_text(comps[i]), iso, iso_gen, sep, sep_gen, strongly, agree});
    }
    if (g.n() <= 12) {
        const bool same = generic_coordinate_components(g).components == comps;
        ok = ok && same;
        r.field("generic_components_agree", same);
    }

    const ThetaMatrix theta = theta_matrix(g);
    const EngineOptions opts = a.common.engine();
    std::vector<std::array<std::size_t, 3>> dims(a.q_max + 1);
    parallel_for(3 * dims.size(), [&](std::size_t i) {
        const std::size_t q = i / 3;
        switch (i % 3) {
            case 0: dims[q][0] = wq_dim_homology(spec, q, opts); break;
            case 1: dims[q][1] = wq_dim_cokernel(spec, q, opts); break;
            default: {
                const SparseMatrix piece = theta.matrix.graded_piece(q);
                dims[q][2] = piece.rows() - certified_rank(piece, opts.mode).rank;
            }
        }
    });
    Table& ht = r.table("hilbert", {"q", "homology", "cokernel", "theta_cokernel", "agree"});
    for (std::size_t q = 0; q <= a.q_max; ++q) {
        const bool agree = dims[q][0] == dims[q][1] && dims[q][1] == dims[q][2];
        ok = ok && agree;
        ht.rows.push_back({q, dims[q][0], dims[q][1], dims[q][2], agree});
    }

    if (all_separable) {
        const auto dec = verify_decomposition(spec, subspaces, a.q_max, opts);
        Table& d = r.table("decomposition", {"q", "dim_W", "sum", "agree"});
        for (const auto& row : dec.rows) d.rows.push_back({row.q, row.total, row.sum, row.agrees()});
        r.field("first_agreement_q", dec.first_agreement_q ? Value(*dec.first_agreement_q) : Value(nullptr));
    } else {
        r.notes.push_back("decomposition skipped: some component is not separable");
    }

    if (a.theta) {
        std::vector<std::string> cols{"row"};
        for (const auto& e : theta.cols) cols.push_back(std::to_string(e[0] + 1) + std::to_string(e[1] + 1));
        Table& tt = r.table("theta", cols);
        for (std::size_t i = 0; i < theta.rows.size(); ++i) {
            const auto& tri = theta.rows[i];
            std::vector<Value> row{std::to_string(tri[0] + 1) + std::to_string(tri[1] + 1) + std::to_string(tri[2] + 1)};
            for (std::size_t c = 0; c < theta.cols.size(); ++c) {
                const MultiPoly& e = theta.matrix(i, c);
                row.push_back(e.is_zero() ? std::string("0") : e.to_string());
            }
            tt.rows.push_back(std::move(row));
        }
    }
    if (!ok) r.notes.push_back("graph criteria and generic routes disagree");
    return ok ? kExitOk : kExitCrossCheck;
}

// --- ann ------------------------------------------------------------------

struct AnnArgs {
    Common common;
    std::string input;
    std::vector<std::string> components;
    std::size_t d_max = 2;
    bool fitting = false;
};

int cmd_ann(const AnnArgs& a, Report& r) {
    const Instance inst = load_instance(a.input);
    describe_instance(r, inst);
    const std::size_t n = inst.spec.n();
    cli_degree_guard(n, a.d_max, a.common.force);
    for (std::size_t d = 0; d <= a.d_max; ++d) check_degree_guard(n, d, a.common.force);
    const auto comps = gather_components(inst, a.components, a.common);

    std::vector<IdealSlice> slices(a.d_max + 1);
    parallel_for(slices.size(), [&](std::size_t d) { slices[d] = annihilator_slice(inst.spec, d); });
    Table& at = r.table("annihilator", {"d", "dim", "basis"});
    for (const auto& s : slices) at.rows.push_back({s.degree, s.basis.size(), polys_value(s.basis)});

    if (a.fitting) {
        const auto gens = fitting_generators(inst.spec, FittingOptions{a.common.force});
        Table& ft = r.table("fitting", {"minor", "generator"});
        for (std::size_t i = 0; i < gens.size(); ++i) ft.rows.push_back({i + 1, gens[i].to_string()});
        if (gens.empty()) r.notes.push_back("all maximal minors vanish: Fitt_0 = 0");
    }

    if (!comps.empty()) {
        const auto red = reducedness_window(inst.spec, comps, 0, a.d_max);
        Table& rt = r.table("reducedness", {"d", "dim_Ann", "dim_intersection", "equal"});
        for (const auto& row : red.rows) rt.rows.push_back({row.d, row.ann_dim, row.intersection_dim, row.equal});
        r.field("window_equal", red.all_equal());
        r.notes.push_back("per-degree comparison in the tested window only");
    }
    return kExitOk;
}

// --- identities -----------------------------------------------------------

struct IdentityArgs {
    Common common;
    std::size_t g_max = 30;
};

int cmd_identities(const IdentityArgs& a, Report& r) {
    if (a.g_max == 0) throw std::invalid_argument("identities: --gmax must be at least 1");
    struct Row {
        GrassmannianIdentity grass;
        BigInt vafa;
        bool porteous = true;
    };
    std::vector<Row> rows(a.g_max);
    parallel_for(rows.size(), [&](std::size_t i) {
        const std::size_t g = i + 1;
        rows[i].grass = grassmannian_degree_identity(g);
        rows[i].vafa = subpencil_count(g, g + 1);
        for (std::size_t s = subpencil_min_a(g); s <= g + 1; ++s) {
            const auto cls = porteous_coefficient(g, s, 3 * g + 1);
            if (!cls.count || *cls.count != subpencil_count(g, s)) rows[i].porteous = false;
        }
    });
    bool ok = true;
    Table& t = r.table("identities", {"g", "subpencil_sum", "grassmannian_degree", "grassmannian_ok", "vafa",
                                      "vafa_ok", "porteous_ok"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t g = i + 1;
        BigInt two_g = 1;
        two_g <<= static_cast<mp_bitcnt_t>(g);
        const bool vafa_ok = rows[i].vafa == two_g;
        ok = ok && rows[i].grass.equal && vafa_ok && rows[i].porteous;
        t.rows.push_back({g, to_string(rows[i].grass.lhs), to_string(rows[i].grass.rhs), rows[i].grass.equal,
                          to_string(rows[i].vafa), vafa_ok, rows[i].porteous});
    }
    Table& k = r.table("kodaira", {"b1", "b2", "q_range", "additive"});
    for (std::size_t b1 = 2; b1 <= 6; ++b1)
        for (std::size_t b2 = b1; b2 <= 6; ++b2) {
            bool add = true;
            for (std::size_t q = 3; q <= 10; ++q)
                add = add && chen_rank_kodaira(b1, b2, q) == chen_rank_surface(b1, q) + chen_rank_surface(b2, q);
            ok = ok && add;
            k.rows.push_back({b1, b2, "3..10", add});
        }
    r.field("all_pass", ok);
    return ok ? kExitOk : kExitCrossCheck;
}

// --- chen -----------------------------------------------------------------

struct ChenArgs {
    Common common;
    std::string input;
    std::optional<std::size_t> surface;
    std::size_t q_max = 6;
    std::string kahler;
};

std::map<std::size_t, std::size_t> parse_genus_counts(const std::string& text) {
    std::map<std::size_t, std::size_t> out;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string item = text.substr(start, comma - start);
        const std::size_t colon = item.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument(item);
            std::size_t used = 0;
            const unsigned long g = std::stoul(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument(item);
            const std::string rest = item.substr(colon + 1);
            const unsigned long h = std::stoul(rest, &used);
            if (used != rest.size() || g < 2) throw std::invalid_argument(item);
            out[g] += h;
        } catch (const std::exception&) {
            throw ParseError("--kahler expects genus:count pairs with genus >= 2, got \"" + item + "\"");
        }
        start = comma + 1;
    }
    return out;
}

int cmd_chen(const ChenArgs& a, Report& r) {
    if (a.input.empty() == !a.surface) throw ParseError("chen: give exactly one of --input and --surface");
    if (a.q_max < 2) throw std::invalid_argument("chen: --qmax must be at least 2");
    PairSpec spec;
    if (a.surface) {
        if (*a.surface < 2) throw std::invalid_argument("chen: --surface genus must be at least 2");
        spec = surface_spec(*a.surface);
        r.field("surface_genus", *a.surface);
    } else {
        const Instance inst = load_instance(a.input);
        describe_instance(r, inst);
        spec = inst.spec;
    }
    r.field("mode", a.common.mode_name());
    cli_degree_guard(spec.n(), a.q_max - 2, a.common.force);
    for (std::size_t q = 2; q <= a.q_max; ++q) check_degree_guard(spec.n(), q - 2, a.common.force);

    std::vector<BigInt> engine(a.q_max + 1);
    parallel_for(a.q_max - 1, [&](std::size_t i) { engine[i + 2] = chen_rank_via_engine(spec, i + 2, a.common.engine()); });
    bool ok = true;
    Table& t = r.table("chen", {"q", "theta_engine", "theta_closed_form", "agree"});
    for (std::size_t q = 2; q <= a.q_max; ++q) {
        if (a.surface) {
            const BigInt closed = chen_rank_surface(*a.surface, q);
            ok = ok && closed == engine[q];
            t.rows.push_back({q, to_string(engine[q]), to_string(closed), closed == engine[q]});
        } else {
            t.rows.push_back({q, to_string(engine[q]), nullptr, nullptr});
        }
    }
    r.notes.push_back("engine Chen ranks are theta_q = dim W_{q-2}, valid under 1-formality (not checked)");
    if (!a.kahler.empty()) {
        const auto counts = parse_genus_counts(a.kahler);
        Table& k = r.table("kahler_conjecture_rhs", {"q", "rhs"});
        for (std::size_t q = 2; q <= a.q_max; ++q) k.rows.push_back({q, to_string(kahler_conjecture_rhs(counts, q))});
        r.notes.push_back("kahler_conjecture_rhs evaluates a conjectural formula");
    }
    if (!ok) r.notes.push_back("engine and closed form disagree");
    return ok ? kExitOk : kExitCrossCheck;
}

std::string echo(const std::vector<std::string>& args) {
    std::string s = "resonance";
    for (const auto& a : args)
        if (a != "--timing") s += " " + a;
    return s;
}

}  // namespace

void cli_degree_guard(std::size_t n, std::size_t q_max, bool force) {
    if (force) return;
    std::size_t limit = 0;
    if (n <= 4) limit = 8;
    else if (n <= 6) limit = 6;
    else return;
    if (q_max > limit)
        throw GuardExceeded("degree guard: q=" + std::to_string(q_max) + " exceeds " + std::to_string(limit) +
                            " for n=" + std::to_string(n) + " (use --force to override)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Koszul modules and resonance of pairs (V, K)", "resonance"};
    app.require_subcommand(1);

    HilbertArgs hilbert;
    auto* h = app.add_subcommand("hilbert", "dim W_q(V,K) by the homology and cokernel routes");
    h->add_option("--input", hilbert.input, "Instance JSON")->required();
    h->add_option("--qmax", hilbert.q_max, "Largest degree")->capture_default_str();
    add_common(h, hilbert.common);

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Isotropy, separability and strong isotropy of components");
    c->add_option("--input", check.input, "Instance JSON")->required();
    c->add_option("--component", check.components, "Basis \"v1;v2;...\", entries comma-separated (repeatable)");
    c->add_option("--qmax", check.q_max, "Also verify the Hilbert decomposition up to this degree");
    add_common(c, check.common);

    RaagArgs raag;
    auto* g = app.add_subcommand("raag", "Right-angled Artin group of a graph");
    g->add_option("--graph", raag.graph, "Graph JSON")->required();
    g->add_option("--qmax", raag.q_max, "Largest degree")->capture_default_str();
    g->add_flag("--theta", raag.theta, "Print the presentation matrix");
    add_common(g, raag.common);

    AnnArgs ann;
    auto* an = app.add_subcommand("ann", "Annihilator slices, Fitting ideal, reducedness window");
    an->add_option("--input", ann.input, "Instance JSON")->required();
    an->add_option("--dmax", ann.d_max, "Largest degree")->capture_default_str();
    an->add_option("--component", ann.components, "Component basis for the reducedness window (repeatable)");
    an->add_flag("--fitting", ann.fitting, "Maximal minors of the presentation");
    add_common(an, ann.common);

    IdentityArgs ids;
    auto* id = app.add_subcommand("identities", "Enumerative identities in exact arithmetic");
    id->add_option("--gmax", ids.g_max, "Largest genus")->capture_default_str();
    add_common(id, ids.common);

    ChenArgs chen;
    auto* ch = app.add_subcommand("chen", "Chen ranks theta_q = dim W_{q-2}");
    ch->add_option("--input", chen.input, "Instance JSON");
    ch->add_option("--surface", chen.surface, "Surface group of genus g");
    ch->add_option("--qmax", chen.q_max, "Largest q")->capture_default_str();
    ch->add_option("--kahler", chen.kahler, "Component genera for the conjectural formula, e.g. 2:1,3:2");
    add_common(ch, chen.common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    Report report;
    report.command = echo(args);
    const auto start = std::chrono::steady_clock::now();
    Common* common = nullptr;
    int code = kExitOk;
    try {
        if (*h) code = cmd_hilbert(hilbert, report), common = &hilbert.common;
        else if (*c) code = cmd_check(check, report), common = &check.common;
        else if (*g) code = cmd_raag(raag, report), common = &raag.common;
        else if (*an) code = cmd_ann(ann, report), common = &ann.common;
        else if (*id) code = cmd_identities(ids, report), common = &ids.common;
        else code = cmd_chen(chen, report), common = &chen.common;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const CrossCheckFailure& e) {
        err << "cross-check failure: " << e.what() << '\n';
        return kExitCrossCheck;
    } catch (const ExactnessError& e) {
        err << "cross-check failure: " << e.what() << '\n';
        return kExitCrossCheck;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }
    render(report, common->format(), out);
    if (common->timing) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        err << "timing: " << ms << " ms\n";
    }
    return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace resonance::cli
