#include "dstrat/cli.hpp"

#include "dstrat/adjacency.hpp"
#include "dstrat/curves.hpp"
#include "dstrat/ddecomp.hpp"
#include "dstrat/polyroots.hpp"
#include "dstrat/strata_topology.hpp"
#include "dstrat/text_util.hpp"
#include "dstrat/theory_config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dstrat::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json index_json(const StabilityIndex& i) { return json::array({i.k, i.l, i.m}); }

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json_mode = false;

    void emit(const json& j, const std::string& text) const {
        if (json_mode)
            out << j.dump(2) << '\n';
        else
            out << text;
    }
};

struct TheoryArgs {
    std::string spec;
    bool monic = false;

    void add(CLI::App* app, bool required = true) {
        auto* o = app->add_option("--theory", spec, "built-in name[:params] or JSON file");
        if (required) o->required();
        app->add_flag("--monic", monic, "use the monic form of a built-in theory");
    }
    StabilityTheory load(const Context& ctx) const {
        std::vector<std::string> warnings;
        StabilityTheory t = load_theory(spec, monic ? TheoryMode::Monic : TheoryMode::Projective, &warnings);
        for (const auto& w : warnings) ctx.err << "warning: " << w << '\n';
        return t;
    }
};

// ---- classify ----

struct ClassifyArgs {
    TheoryArgs theory;
    std::string poly, matrix;
    int ambient = -1;
    bool roots = false;
};

void cmd_classify(const ClassifyArgs& a, const Context& ctx) {
    const StabilityTheory t = a.theory.load(ctx);
    if (a.poly.empty() == a.matrix.empty()) throw std::invalid_argument("give exactly one of --poly and --matrix");
    const ComplexPoly p = a.poly.empty() ? char_poly(parse_matrix_csv(read_file(a.matrix))) : parse_poly(a.poly);
    const int ambient = a.ambient >= 0 ? a.ambient : p.degree();
    const IndexReport rep = classify_roots(t, p, ambient);
    std::ostringstream text;
    text << to_string(rep.index) << '\n';
    json roots = json::array();
    for (const auto& r : rep.roots) {
        const std::string value = r.at_infinity ? "inf" : format_complex(r.value);
        roots.push_back({{"value", value},
                         {"multiplicity", r.multiplicity},
                         {"stratum", short_name(r.stratum)},
                         {"tolerance_limited", r.tolerance_limited}});
        if (a.roots)
            text << value << " x" << r.multiplicity << ' ' << short_name(r.stratum)
                 << (r.tolerance_limited ? " tolerance-limited" : "") << '\n';
    }
    ctx.emit({{"index", index_json(rep.index)}, {"ambient", ambient}, {"roots", roots}}, text.str());
}

// ---- theory-info ----

std::string topology_text(const TheoryTopology& topo) {
    std::ostringstream s;
    for (StratumKind k : kAllStrata) {
        s << (k == StratumKind::Stable ? "" : "; ") << short_name(k) << " b0=" << topo[k].b0 << " b1=" << topo[k].b1;
    }
    return s.str();
}

void cmd_theory_info(const TheoryArgs& a, const Context& ctx) {
    const StabilityTheory t = a.load(ctx);
    std::ostringstream s;
    s << "name: " << t.name << '\n' << "mode: " << to_string(t.mode) << '\n';
    if (t.infinity_stratum) s << "infinity: " << short_name(*t.infinity_stratum) << '\n';
    s << "region: " << t.region.to_string() << '\n' << "topology: " << topology_text(t.topology) << '\n';
    if (t.punctured_topology) s << "punctured topology: " << topology_text(*t.punctured_topology) << '\n';
    if (t.adjacency) {
        s << "adjacency:";
        for (const auto& [x, y] : *t.adjacency) s << ' ' << short_name(x) << "->" << short_name(y);
        s << '\n';
    }
    if (t.unbounded) {
        s << "unbounded:";
        for (StratumKind k : *t.unbounded) s << ' ' << short_name(k);
        s << '\n';
    }
    ctx.emit(theory_to_json(t), s.str());
}

// ---- strata ----

struct StrataArgs {
    TheoryArgs theory;
    std::string what, index;
    int u = -1;
    int ambient = -1;
};

constexpr std::size_t kMaxListedComponents = 100000;

std::string describe(const ComponentSpec& spec) {
    std::ostringstream s;
    bool first = true;
    for (StratumKind k : kAllStrata)
        for (const auto& f : spec[k]) {
            s << (first ? "" : " ") << short_name(k) << ".C" << f.component << '^' << f.lambda;
            first = false;
        }
    return first ? "empty" : s.str();
}

void cmd_strata(const StrataArgs& a, const Context& ctx) {
    const StabilityIndex idx = parse_index(a.index);
    if (a.what == "circle") {
        const auto c = homeomorphism_type_circle_boundary(idx);
        ctx.emit({{"description", c.description},
                  {"euclidean_dim", c.euclidean_dim},
                  {"disc_dim", c.disc_dim},
                  {"has_circle", c.has_circle},
                  {"orientable", c.orientable}},
                 c.description + "\n");
        return;
    }
    const StabilityTheory t = a.theory.load(ctx);
    if (a.what == "components") {
        const BigInt n = component_count(t.topology, idx);
        ctx.emit({{"count", big(n)}}, n.str() + "\n");
    } else if (a.what == "betti") {
        if (a.u >= 0) {
            const BigInt b = betti(t.topology, idx, a.u);
            ctx.emit({{"u", a.u}, {"betti", big(b)}}, b.str() + "\n");
        } else {
            json arr = json::array();
            std::string text;
            for (const auto& b : betti_vector(t.topology, idx)) {
                arr.push_back(big(b));
                text += (text.empty() ? "" : " ") + b.str();
            }
            ctx.emit({{"betti", arr}}, text + "\n");
        }
    } else if (a.what == "homotopy" || a.what == "pi1") {
        if (component_count(t.topology, idx) > kMaxListedComponents)
            throw std::invalid_argument("too many components to list");
        json arr = json::array();
        std::string text;
        for (const auto& spec : enumerate_components(t, idx)) {
            const std::string value =
                a.what == "homotopy" ? homotopy_type(spec).to_string() : fundamental_group(spec).to_string();
            arr.push_back({{"component", describe(spec)}, {a.what, value}});
            text += describe(spec) + ": " + value + "\n";
        }
        ctx.emit({{"components", arr}}, text);
    } else {  // local
        const int ambient = a.ambient >= 0 ? a.ambient : idx.ambient() + 1;
        const auto info = local_stratum_info(t, idx, ambient);
        json arr = json::array();
        std::string bt;
        for (const auto& b : info.betti) {
            arr.push_back(big(b));
            bt += (bt.empty() ? "" : " ") + b.str();
        }
        std::ostringstream s;
        s << "monic index: " << to_string(info.monic_index) << '\n'
          << "roots at infinity: " << info.roots_at_infinity << '\n'
          << "components: " << info.components.str() << '\n'
          << "betti: " << bt << '\n';
        ctx.emit({{"monic_index", index_json(info.monic_index)},
                  {"roots_at_infinity", info.roots_at_infinity},
                  {"components", big(info.components)},
                  {"betti", arr}},
                 s.str());
    }
}

// ---- adjacency / local-adjacency ----

struct AdjacencyArgs {
    TheoryArgs theory;
    int n = 1;
    bool dot = false;
    bool numeric = false;
    unsigned threads = 0;
};

void emit_digraph(const Digraph& g, bool dot, const Context& ctx) {
    json edges = json::array();
    for (const auto& [x, y] : g.labelled_edges(true)) edges.push_back({x, y});
    std::vector<std::string> names = g.vertices;
    std::sort(names.begin(), names.end());
    std::string text;
    if (dot) {
        text = dot_export(g);
    } else {
        text = "vertices:";
        for (const auto& v : names) text += " " + v;
        text += "\n";
        for (const auto& [x, y] : g.labelled_edges(false)) text += x + " -> " + y + "\n";
    }
    ctx.emit({{"vertices", names}, {"edges", edges}}, text);
}

void cmd_adjacency(const AdjacencyArgs& a, const Context& ctx, bool local) {
    const StabilityTheory t = a.theory.load(ctx);
    Digraph g = local ? local_base_digraph(t) : a.numeric ? numeric_adjacency(t) : base_adjacency(t);
    if (a.n > 1 || local) g = sym_product_digraph(g, a.n, a.threads).graph;
    emit_digraph(g, a.dot, ctx);
}

// ---- adjacent ----

struct AdjacentArgs {
    TheoryArgs theory;
    std::string from, to;
};

MultisetVertex to_multiset(const Digraph& base, const StabilityIndex& idx) {
    MultisetVertex m(base.vertex_count(), 0);
    for (StratumKind k : kAllStrata) {
        if (idx[k] == 0) continue;
        const int v = base.find(short_name(k));
        if (v < 0) throw std::invalid_argument("the theory has no " + long_name(k) + " stratum");
        m[v] = idx[k];
    }
    return m;
}

void cmd_adjacent(const AdjacentArgs& a, const Context& ctx) {
    const StabilityTheory t = a.theory.load(ctx);
    const Digraph g = base_adjacency(t);
    const FlowResult r = adjacent_flow(g, to_multiset(g, parse_index(a.from)), to_multiset(g, parse_index(a.to)));
    std::string text = yes_no(r.adjacent) + "\n";
    json witness = json::array();
    if (r.witness)
        for (const auto& [e, count] : *r.witness) {
            const std::string& x = g.vertices[e.first];
            const std::string& y = g.vertices[e.second];
            witness.push_back({{"from", x}, {"to", y}, {"count", count}});
            text += x + " -> " + y + " x" + std::to_string(count) + "\n";
        }
    ctx.emit({{"adjacent", r.adjacent}, {"witness", witness}}, text);
}

// ---- ddecomp ----

struct DdecompArgs {
    TheoryArgs theory;
    std::string base = "0";
    std::vector<std::string> gens, matrices;
    std::string window = "-2,2,-2,2";
    int res = 256;
    std::string out_path, format;
    unsigned threads = 0;
};

std::vector<Complex> parse_coeffs(const std::string& text) {
    std::vector<Complex> c;
    for (const auto& tok : split(text, ',')) c.push_back(parse_complex(tok));
    return c;
}

void cmd_ddecomp(const DdecompArgs& a, const Context& ctx) {
    const StabilityTheory t = a.theory.load(ctx);
    const auto wv = split(a.window, ',');
    if (wv.size() != 2 && wv.size() != 4) throw std::invalid_argument("--window needs x0,x1 or x0,x1,y0,y1");
    Window w{parse_double(wv[0]), parse_double(wv[1]), 0, 0};
    if (wv.size() == 4) {
        w.y0 = parse_double(wv[2]);
        w.y1 = parse_double(wv[3]);
    }
    if (a.gens.empty() == a.matrices.empty()) throw std::invalid_argument("give either --gen or --matrix");
    DecompositionMap m;
    if (!a.gens.empty()) {
        std::vector<std::vector<Complex>> gens;
        for (const auto& g : a.gens) gens.push_back(parse_coeffs(g));
        m = scan(t, make_affine_family(parse_coeffs(a.base), std::move(gens)), w, a.res, a.threads);
    } else {
        std::vector<SquareMatrix> mats;
        for (const auto& path : a.matrices) mats.push_back(parse_matrix_csv(read_file(path)));
        m = scan(t, make_matrix_family(std::move(mats)), w, a.res, a.threads);
    }
    if (m.parameter_count == 2 && wv.size() != 4) throw std::invalid_argument("two parameters need x0,x1,y0,y1");
    if (!a.out_path.empty()) {
        std::string fmt = a.format;
        if (fmt.empty()) {
            const auto dot = a.out_path.rfind('.');
            if (dot == std::string::npos) throw std::invalid_argument("cannot infer the export format of '" + a.out_path + "'");
            fmt = a.out_path.substr(dot + 1);
        }
        const std::string bytes = export_map(m, fmt);
        std::ofstream f(a.out_path, std::ios::binary);
        if (!f || !(f << bytes)) throw std::runtime_error("cannot write '" + a.out_path + "'");
    }
    json regions = json::array();
    std::ostringstream s;
    s << "label index cells i0 i1 j0 j1 boundary\n";
    for (const auto& r : extract_regions(m)) {
        regions.push_back({{"label", r.label},
                           {"index", index_json(r.index)},
                           {"cells", r.cells},
                           {"bbox", {r.i0, r.i1, r.j0, r.j1}},
                           {"boundary", r.boundary()}});
        s << r.label << ' ' << to_string(r.index) << ' ' << r.cells << ' ' << r.i0 << ' ' << r.i1 << ' ' << r.j0 << ' '
          << r.j1 << ' ' << yes_no(r.boundary()) << '\n';
    }
    long degenerate = std::count(m.labels.begin(), m.labels.end(), 0);
    s << "degenerate cells: " << degenerate << '\n';
    ctx.emit({{"nx", m.nx}, {"ny", m.ny}, {"ambient_degree", m.ambient_degree}, {"regions", regions},
              {"degenerate_cells", degenerate}},
             s.str());
}

// ---- curve ----

struct CurveArgs {
    std::string poly;
    bool orbit = false;
    double radial = std::numeric_limits<double>::quiet_NaN();
};

void cmd_curve(const CurveArgs& a, const Context& ctx) {
    const BivarPoly f = parse_bivar_poly(a.poly);
    const CurveClassification c = classify_standard(f);
    json j = {{"standard", to_string(c.label)},
              {"conj_invariant", c.conj_invariant},
              {"inv_invariant", c.inv_invariant},
              {"sign_near_zero", to_string(c.sign_near_zero)},
              {"sign_near_infinity", to_string(c.sign_near_infinity)},
              {"separates_zero_and_infinity", c.separates_zero_and_infinity}};
    std::ostringstream s;
    s << "standard: " << to_string(c.label) << '\n'
      << "conj invariant: " << yes_no(c.conj_invariant) << '\n'
      << "inv invariant: " << yes_no(c.inv_invariant) << '\n'
      << "sign near 0: " << to_string(c.sign_near_zero) << '\n'
      << "sign near infinity: " << to_string(c.sign_near_infinity) << '\n'
      << "separates 0 and infinity: " << yes_no(c.separates_zero_and_infinity) << '\n';
    if (a.orbit) {
        const std::string o = orbit_polynomial(f).to_string();
        j["orbit"] = o;
        s << "orbit: " << o << '\n';
    }
    if (!std::isnan(a.radial)) {
        const auto coeffs = radial_coefficients(f, a.radial);
        const std::string kind = to_string(palindrome_test(coeffs));
        j["radial"] = coeffs;
        j["palindrome"] = kind;
        s << "radial:";
        for (double v : coeffs) s << ' ' << format_double(v);
        s << '\n' << "palindrome: " << kind << '\n';
    }
    ctx.emit(j, s.str());
}

// ---- duality ----

struct DualityArgs {
    TheoryArgs theory;
    std::string values;
};

void cmd_duality(const DualityArgs& a, const Context& ctx) {
    const StabilityTheory t = a.theory.load(ctx);
    const DualityReport r = duality_check(parse_coeffs(a.values), t);
    auto join = [](const std::vector<Complex>& v) {
        std::string s;
        for (Complex z : v) s += (s.empty() ? "" : ",") + format_complex(z);
        return s;
    };
    std::ostringstream s;
    s << "reciprocal: " << join(r.reciprocal_coeffs) << '\n'
      << "reversed char poly: " << join(r.reversed_char_coeffs) << '\n'
      << "scale: " << format_complex(r.scale) << '\n'
      << "residual: " << format_double(r.proportionality_residual) << '\n'
      << "reciprocal index: " << to_string(r.reciprocal_index) << '\n'
      << "dual index: " << to_string(r.dual_index) << '\n'
      << "indices equal: " << yes_no(r.indices_equal) << '\n';
    ctx.emit({{"reciprocal", join(r.reciprocal_coeffs)},
              {"reversed_char_poly", join(r.reversed_char_coeffs)},
              {"scale", format_complex(r.scale)},
              {"residual", r.proportionality_residual},
              {"reciprocal_index", index_json(r.reciprocal_index)},
              {"dual_index", index_json(r.dual_index)},
              {"indices_equal", r.indices_equal}},
             s.str());
}

// ---- poset ----

struct PosetArgs {
    int r = 1, n = 1, q = 1;
    bool elements = false;
};

void cmd_poset(const PosetArgs& a, const Context& ctx) {
    const PolePoset p = pole_placement_poset(a.r, a.n, a.q);
    auto label = [](const std::vector<int>& e) {
        std::string s = "{";
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
        return s + "}";
    };
    json counts = json::array();
    std::ostringstream s;
    s << "counts:";
    for (const auto& c : p.counts) {
        counts.push_back(big(c));
        s << ' ' << c.str();
    }
    s << '\n'
      << "elements: " << p.elements.size() << '\n'
      << "cover edges: " << p.cover_edges.size() << '\n'
      << "chain: " << yes_no(p.is_chain()) << '\n'
      << "antichain: " << yes_no(p.is_antichain()) << '\n';
    json j = {{"counts", counts},
              {"element_count", p.elements.size()},
              {"cover_edge_count", p.cover_edges.size()},
              {"chain", p.is_chain()},
              {"antichain", p.is_antichain()}};
    if (a.elements) {
        json el = json::array(), edges = json::array();
        for (const auto& e : p.elements) {
            el.push_back(label(e));
            s << label(e) << '\n';
        }
        for (const auto& [x, y] : p.cover_edges) {
            edges.push_back({label(p.elements[x]), label(p.elements[y])});
            s << label(p.elements[x]) << " < " << label(p.elements[y]) << '\n';
        }
        j["elements"] = el;
        j["cover_edges"] = edges;
    }
    ctx.emit(j, s.str());
}

// ---- validate ----

struct ValidateArgs {
    TheoryArgs theory;
    int res = 256;
};

// Returns false when a digraph check fails.
bool cmd_validate(const ValidateArgs& a, const Context& ctx) {
    const StabilityTheory t = a.theory.load(ctx);
    const ValidationReport rep = validate_theory(t, a.res);
    const DigraphCheck base = validate_theory_digraph(base_adjacency(t));
    std::optional<DigraphCheck> local;
    if (t.mode == TheoryMode::Projective) local = validate_local_digraph(local_base_digraph(t));
    const bool ok = base.valid && (!local || local->valid);
    std::ostringstream s;
    s << (ok ? "valid" : "invalid") << '\n';
    for (const auto& w : rep.warnings) s << "warning: " << w << '\n';
    for (const auto& c : rep.checks) s << "check: " << c << '\n';
    for (const auto& r : base.reasons) s << "adjacency: " << r << '\n';
    if (local)
        for (const auto& r : local->reasons) s << "local adjacency: " << r << '\n';
    json j = {{"valid", ok},
              {"warnings", rep.warnings},
              {"checks", rep.checks},
              {"adjacency_reasons", base.reasons}};
    if (local) j["local_adjacency_reasons"] = local->reasons;
    ctx.emit(j, s.str());
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stability strata of polynomial root configurations", "dstrat"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_mode = false;
    app.add_flag("--json", json_mode, "structured JSON output");

    ClassifyArgs classify;
    auto* c_classify = app.add_subcommand("classify", "stability index of a polynomial or matrix");
    classify.theory.add(c_classify);
    c_classify->add_option("--poly", classify.poly, "ascending coefficients, e.g. 1,0,1");
    c_classify->add_option("--matrix", classify.matrix, "CSV matrix file; its characteristic polynomial is used");
    c_classify->add_option("--ambient", classify.ambient, "ambient degree (projective theories)");
    c_classify->add_flag("--roots", classify.roots, "list roots and their strata");

    TheoryArgs info;
    auto* c_info = app.add_subcommand("theory-info", "describe a theory");
    info.add(c_info);

    StrataArgs strata;
    auto* c_strata = app.add_subcommand("strata", "topology of a stratum");
    c_strata->add_option("what", strata.what, "components | betti | homotopy | pi1 | local | circle")
        ->required()
        ->check(CLI::IsMember({"components", "betti", "homotopy", "pi1", "local", "circle"}));
    strata.theory.add(c_strata, false);
    c_strata->add_option("--index", strata.index, "k,l,m")->required();
    c_strata->add_option("--u", strata.u, "single Betti degree")->check(CLI::NonNegativeNumber);
    c_strata->add_option("--ambient", strata.ambient, "ambient degree for 'local' (default k+l+m+1)");

    AdjacencyArgs adjacency;
    auto* c_adj = app.add_subcommand("adjacency", "stratum adjacency digraph or its symmetric power");
    adjacency.theory.add(c_adj);
    c_adj->add_option("--n", adjacency.n, "symmetric power")->check(CLI::PositiveNumber);
    c_adj->add_flag("--dot", adjacency.dot, "DOT output");
    c_adj->add_flag("--numeric", adjacency.numeric, "ignore declared adjacency and sample");
    c_adj->add_option("--threads", adjacency.threads, "worker threads (0 = all cores)");

    AdjacencyArgs local_adj;
    auto* c_local = app.add_subcommand("local-adjacency", "adjacency of strata near infinity");
    local_adj.theory.add(c_local);
    c_local->add_option("--n", local_adj.n, "number of roots")->required()->check(CLI::PositiveNumber);
    c_local->add_flag("--dot", local_adj.dot, "DOT output");
    c_local->add_option("--threads", local_adj.threads, "worker threads (0 = all cores)");

    AdjacentArgs adjacent;
    auto* c_adjacent = app.add_subcommand("adjacent", "whether stratum --to meets the closure of stratum --from");
    adjacent.theory.add(c_adjacent);
    c_adjacent->add_option("--from", adjacent.from, "k,l,m")->required();
    c_adjacent->add_option("--to", adjacent.to, "k,l,m")->required();

    DdecompArgs dd;
    auto* c_dd = app.add_subcommand("ddecomp", "D-decomposition of an affine family");
    dd.theory.add(c_dd);
    c_dd->add_option("--base", dd.base, "ascending coefficients of the base polynomial");
    c_dd->add_option("--gen", dd.gens, "generator coefficients (once or twice)")->allow_extra_args(false);
    c_dd->add_option("--matrix", dd.matrices, "CSV matrices A0, A1[, A2]")->allow_extra_args(false);
    c_dd->add_option("--window", dd.window, "x0,x1[,y0,y1]");
    c_dd->add_option("--res", dd.res, "cells per axis");
    c_dd->add_option("--out", dd.out_path, "export file (.pgm, .csv or .json)");
    c_dd->add_option("--format", dd.format, "export format overriding the extension");
    c_dd->add_option("--threads", dd.threads, "worker threads (0 = all cores)");

    CurveArgs curve;
    auto* c_curve = app.add_subcommand("curve", "classify a real algebraic curve f(x, y) = 0");
    c_curve->add_option("--poly", curve.poly, "e.g. x^2+y^2-1")->required();
    c_curve->add_flag("--orbit", curve.orbit, "print the orbit polynomial");
    c_curve->add_option("--radial", curve.radial, "angle phi for radial coefficients");

    DualityArgs duality;
    auto* c_dual = app.add_subcommand("duality", "reciprocal roots versus the dual theory");
    duality.theory.add(c_dual);
    c_dual->add_option("--values", duality.values, "diagonal entries s1,s2,...")->required();

    PosetArgs poset;
    auto* c_poset = app.add_subcommand("poset", "pole-placement subspace poset");
    c_poset->add_option("--r", poset.r, "number of stable points")->required();
    c_poset->add_option("--n", poset.n, "degree")->required();
    c_poset->add_option("--q", poset.q, "smallest codimension")->required();
    c_poset->add_flag("--elements", poset.elements, "list elements and cover relations");

    ValidateArgs validate;
    auto* c_validate = app.add_subcommand("validate", "check a theory and its adjacency digraphs");
    validate.theory.add(c_validate);
    c_validate->add_option("--res", validate.res, "raster resolution of the topology spot checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Context ctx{out, err, json_mode};
    try {
        if (c_classify->parsed()) cmd_classify(classify, ctx);
        else if (c_info->parsed()) cmd_theory_info(info, ctx);
        else if (c_strata->parsed()) {
            if (strata.what != "circle" && strata.theory.spec.empty())
                throw CLI::RequiredError("--theory");
            cmd_strata(strata, ctx);
        } else if (c_adj->parsed()) cmd_adjacency(adjacency, ctx, false);
        else if (c_local->parsed()) cmd_adjacency(local_adj, ctx, true);
        else if (c_adjacent->parsed()) cmd_adjacent(adjacent, ctx);
        else if (c_dd->parsed()) cmd_ddecomp(dd, ctx);
        else if (c_curve->parsed()) cmd_curve(curve, ctx);
        else if (c_dual->parsed()) cmd_duality(duality, ctx);
        else if (c_poset->parsed()) cmd_poset(poset, ctx);
        else if (c_validate->parsed()) return cmd_validate(validate, ctx) ? 0 : 1;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace dstrat::cli
