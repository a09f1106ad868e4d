#include "dstrat/region_model.hpp"

#include "dstrat/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dstrat {

std::string short_name(StratumKind k) {
    switch (k) {
        case StratumKind::Stable: return "s";
        case StratumKind::Semistable: return "ss";
        case StratumKind::Unstable: return "un";
    }
    return "?";
}

std::string long_name(StratumKind k) {
    switch (k) {
        case StratumKind::Stable: return "Stable";
        case StratumKind::Semistable: return "Semistable";
        case StratumKind::Unstable: return "Unstable";
    }
    return "?";
}

StratumKind parse_stratum(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "s" || t == "stable") return StratumKind::Stable;
    if (t == "ss" || t == "semistable") return StratumKind::Semistable;
    if (t == "un" || t == "u" || t == "unstable") return StratumKind::Unstable;
    throw std::invalid_argument("unknown stratum '" + std::string(text) + "'");
}

std::string to_string(TheoryMode m) { return m == TheoryMode::Projective ? "projective" : "monic"; }

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Less: return "<";
        case Relation::LessEq: return "<=";
        case Relation::Equal: return "=";
    }
    return "?";
}

RegionExpr RegionExpr::leaf(BivarPoly poly, Relation rel) {
    if (poly.is_zero()) throw std::invalid_argument("region leaf with the zero polynomial");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    CompiledPoly compiled(poly);
    n->leaf = RegionLeaf{std::move(poly), rel, std::move(compiled)};
    return RegionExpr(std::move(n));
}

RegionExpr RegionExpr::all_of(std::vector<RegionExpr> children) {
    if (children.empty()) throw std::invalid_argument("And node needs at least one child");
    auto n = std::make_shared<Node>();
    n->kind = Kind::And;
    n->children = std::move(children);
    return RegionExpr(std::move(n));
}

RegionExpr RegionExpr::any_of(std::vector<RegionExpr> children) {
    if (children.empty()) throw std::invalid_argument("Or node needs at least one child");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Or;
    n->children = std::move(children);
    return RegionExpr(std::move(n));
}

RegionExpr RegionExpr::negation(RegionExpr child) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->children.push_back(std::move(child));
    return RegionExpr(std::move(n));
}

RegionExpr::Kind RegionExpr::kind() const { return node_->kind; }
const std::vector<RegionExpr>& RegionExpr::children() const { return node_->children; }

const RegionLeaf& RegionExpr::leaf_data() const {
    if (!node_->leaf) throw std::logic_error("not a leaf");
    return *node_->leaf;
}

std::vector<const RegionLeaf*> RegionExpr::leaves() const {
    std::vector<const RegionLeaf*> out;
    auto walk = [&](auto&& self, const RegionExpr& e) -> void {
        if (e.kind() == Kind::Leaf) {
            out.push_back(&e.leaf_data());
            return;
        }
        for (const auto& c : e.children()) self(self, c);
    };
    walk(walk, *this);
    return out;
}

bool RegionExpr::has_equality_leaf() const {
    for (const RegionLeaf* l : leaves())
        if (l->rel == Relation::Equal) return true;
    return false;
}

std::string RegionExpr::to_string() const {
    switch (kind()) {
        case Kind::Leaf: return "{" + leaf_data().poly.to_string() + " " + dstrat::to_string(leaf_data().rel) + " 0}";
        case Kind::Not: return "not " + children().front().to_string();
        case Kind::And:
        case Kind::Or: {
            if (children().size() == 1) return children().front().to_string();
            std::string s = "(";
            for (std::size_t i = 0; i < children().size(); ++i) {
                if (i) s += kind() == Kind::And ? " and " : " or ";
                s += children()[i].to_string();
            }
            return s + ")";
        }
    }
    return "?";
}

namespace {

bool leaf_truth(double v, Relation rel, bool relaxed, bool positive) {
    if (!relaxed) {
        switch (rel) {
            case Relation::Less: return v < 0;
            case Relation::LessEq: return v <= 0;
            case Relation::Equal: return v == 0;
        }
    }
    if (positive) return rel == Relation::Equal ? v == 0 : v <= 0;
    return rel == Relation::Equal ? false : v < 0;
}

struct Evaluator {
    double x, y, tol;
    bool relaxed;
    const std::vector<bool>* forced;
    std::size_t next_leaf = 0;

    bool eval(const RegionExpr& e, bool positive) {
        switch (e.kind()) {
            case RegionExpr::Kind::Leaf: {
                const std::size_t id = next_leaf++;
                double v = 0;
                if (!(forced && id < forced->size() && (*forced)[id])) {
                    v = e.leaf_data().compiled(x, y);
                    if (std::abs(v) <= tol) v = 0;
                }
                return leaf_truth(v, e.leaf_data().rel, relaxed, positive);
            }
            case RegionExpr::Kind::Not: return !eval(e.children().front(), !positive);
            case RegionExpr::Kind::And: {
                bool r = true;
                for (const auto& c : e.children()) r = eval(c, positive) && r;  // no short-circuit: keeps leaf ids aligned
                return r;
            }
            case RegionExpr::Kind::Or: {
                bool r = false;
                for (const auto& c : e.children()) r = eval(c, positive) || r;
                return r;
            }
        }
        return false;
    }
};

}  // namespace

bool eval_membership(const RegionExpr& expr, double x, double y, bool relaxed, double tol) {
    Evaluator ev{x, y, tol, relaxed, nullptr};
    return ev.eval(expr, true);
}

bool eval_membership_forced(const RegionExpr& expr, double x, double y, bool relaxed, double tol,
                            const std::vector<bool>& forced_zero) {
    Evaluator ev{x, y, tol, relaxed, &forced_zero};
    return ev.eval(expr, true);
}

const StratumBetti& TheoryTopology::operator[](StratumKind k) const {
    return k == StratumKind::Stable ? s : k == StratumKind::Semistable ? ss : un;
}

StratumBetti& TheoryTopology::operator[](StratumKind k) {
    return k == StratumKind::Stable ? s : k == StratumKind::Semistable ? ss : un;
}

namespace {

StratumKind classify_finite(const StabilityTheory& t, std::complex<double> z, double tol) {
    if (t.origin_stratum && std::abs(z) <= t.boundary_tolerance) return *t.origin_stratum;
    if (eval_membership(t.region, z.real(), z.imag(), false, tol)) return StratumKind::Stable;
    if (eval_membership(t.region, z.real(), z.imag(), true, tol)) return StratumKind::Semistable;
    return StratumKind::Unstable;
}

}  // namespace

StratumKind classify_point(const StabilityTheory& t, const SpherePoint& p) {
    if (p.infinite) {
        if (t.mode == TheoryMode::Monic) throw std::invalid_argument("the point at infinity is not part of a monic theory");
        if (!t.infinity_stratum) throw std::invalid_argument("projective theory without an infinity stratum");
        return *t.infinity_stratum;
    }
    return classify_finite(t, p.z, t.boundary_tolerance);
}

StratumKind classify_point(const StabilityTheory& t, std::complex<double> z) {
    return classify_finite(t, z, t.boundary_tolerance);
}

StratumKind classify_point_exact_sign(const StabilityTheory& t, std::complex<double> z) {
    return classify_finite(t, z, 0.0);
}

namespace {

StratumBetti sb(int b0, int b1, std::vector<int> comps) { return StratumBetti{b0, b1, std::move(comps)}; }

BivarPoly X() { return BivarPoly::x(); }
BivarPoly Y() { return BivarPoly::y(); }
BivarPoly C(const Rational& c) { return BivarPoly::constant(c); }
BivarPoly R() { return BivarPoly::rho(); }

RegionExpr lt(BivarPoly p) { return RegionExpr::leaf(std::move(p), Relation::Less); }

// Fills in the strata data shared by theories whose stable set is an open
// topological disk bounded by a Jordan curve (through infinity or not).
void disk_theory(StabilityTheory& t, bool boundary_through_infinity) {
    const bool proj = t.mode == TheoryMode::Projective;
    TheoryTopology sphere{sb(1, 0, {0}), sb(1, 1, {1}), sb(1, 0, {0})};
    TheoryTopology plane = sphere;
    if (boundary_through_infinity) {
        plane.ss = sb(1, 0, {0});
        t.unbounded = std::vector<StratumKind>{StratumKind::Stable, StratumKind::Semistable, StratumKind::Unstable};
    } else {
        plane.un = sb(1, 1, {1});
        t.unbounded = std::vector<StratumKind>{StratumKind::Unstable};
    }
    t.topology = proj ? sphere : plane;
    t.punctured_topology = plane;
    if (proj) t.infinity_stratum = boundary_through_infinity ? StratumKind::Semistable : StratumKind::Unstable;
    t.adjacency = std::vector<StratumEdge>{{StratumKind::Stable, StratumKind::Semistable},
                                           {StratumKind::Unstable, StratumKind::Semistable}};
}

}  // namespace

std::vector<std::string> builtin_theory_names() {
    return {"hurwitz",        "schur",         "hyperbolicity", "aperiodicity", "fenichel",
            "hurwitz_sector", "schur_diamond", "annulus",       "poles",        "ride_quality"};
}

StabilityTheory builtin_theory(std::string_view name, const std::vector<double>& params, TheoryMode mode) {
    StabilityTheory t;
    t.name = std::string(name);
    t.mode = mode;
    const bool proj = mode == TheoryMode::Projective;
    auto no_params = [&] {
        if (!params.empty()) throw std::invalid_argument("theory '" + t.name + "' takes no parameters");
    };
    const StratumKind S = StratumKind::Stable, SS = StratumKind::Semistable, UN = StratumKind::Unstable;

    if (name == "hurwitz") {
        no_params();
        t.region = lt(X());
        disk_theory(t, true);
    } else if (name == "schur") {
        no_params();
        t.region = lt(R() - C(1));
        disk_theory(t, false);
    } else if (name == "hyperbolicity") {
        // Stable set is the open lower half-plane; the real line is its boundary.
        no_params();
        t.region = lt(Y());
        disk_theory(t, true);
    } else if (name == "hurwitz_sector") {
        no_params();
        t.region = RegionExpr::all_of({lt(X() + Y()), lt(X() - Y())});
        disk_theory(t, true);
    } else if (name == "schur_diamond") {
        no_params();
        t.region = RegionExpr::all_of(
            {lt(X() + Y() - C(1)), lt(X() - Y() - C(1)), lt(-X() + Y() - C(1)), lt(-X() - Y() - C(1))});
        disk_theory(t, false);
    } else if (name == "ride_quality") {
        no_params();
        t.region = RegionExpr::all_of({lt(C(Rational(3, 5)) - R()), lt(R() - C(1)), lt(-Y() - C(Rational(1, 2))),
                                       lt(Y() - C(Rational(1, 2))), lt(X())});
        disk_theory(t, false);
    } else if (name == "aperiodicity") {
        no_params();
        t.region = RegionExpr::all_of({RegionExpr::leaf(Y(), Relation::Equal), lt(X())});
        // Stable: open negative ray. Semistable: {0}, plus infinity on the sphere.
        TheoryTopology plane{sb(1, 0, {0}), sb(1, 0, {0}), sb(1, 0, {0})};
        TheoryTopology sphere{sb(1, 0, {0}), sb(2, 0, {0, 0}), sb(1, 0, {0})};
        t.topology = proj ? sphere : plane;
        t.punctured_topology = plane;
        if (proj) t.infinity_stratum = SS;
        t.adjacency = std::vector<StratumEdge>{{S, SS}, {UN, SS}, {UN, S}};
        t.unbounded = std::vector<StratumKind>{S, UN};
    } else if (name == "fenichel") {
        no_params();
        t.region = RegionExpr::any_of({lt(X()), lt(-X())});
        TheoryTopology plane{sb(2, 0, {0, 0}), sb(1, 0, {0}), sb(0, 0, {})};
        TheoryTopology sphere{sb(2, 0, {0, 0}), sb(1, 1, {1}), sb(0, 0, {})};
        t.topology = proj ? sphere : plane;
        t.punctured_topology = plane;
        if (proj) t.infinity_stratum = SS;
        t.adjacency = std::vector<StratumEdge>{{S, SS}};
        t.unbounded = std::vector<StratumKind>{S, SS};
    } else if (name == "annulus") {
        if (params.size() != 2) throw std::invalid_argument("annulus takes two radii r1 < r2");
        const double r1 = params[0], r2 = params[1];
        if (!(r1 > 0) || !(r1 < r2) || !std::isfinite(r2))
            throw std::invalid_argument("annulus radii must satisfy 0 < r1 < r2");
        const Rational q1 = rational_from_double(r1), q2 = rational_from_double(r2);
        t.region = RegionExpr::all_of({lt(C(q1 * q1) - R()), lt(R() - C(q2 * q2))});
        TheoryTopology sphere{sb(1, 1, {1}), sb(2, 2, {1, 1}), sb(2, 0, {0, 0})};
        TheoryTopology plane{sb(1, 1, {1}), sb(2, 2, {1, 1}), sb(2, 1, {0, 1})};
        t.topology = proj ? sphere : plane;
        t.punctured_topology = plane;
        if (proj) t.infinity_stratum = UN;
        t.adjacency = std::vector<StratumEdge>{{S, SS}, {UN, SS}};
        t.unbounded = std::vector<StratumKind>{UN};
        const double w = std::max(2.0, 1.25 * r2);
        t.window = Window{-w, w, -w, w};
    } else if (name == "poles") {
        if (params.empty() || params.size() % 2 != 0)
            throw std::invalid_argument("poles takes a non-empty list of (re, im) pairs");
        std::vector<RegionExpr> pts;
        std::vector<std::complex<double>> seen;
        double reach = 0;
        for (std::size_t i = 0; i < params.size(); i += 2) {
            const std::complex<double> p(params[i], params[i + 1]);
            for (auto q : seen)
                if (q == p) throw std::invalid_argument("poles must be distinct");
            seen.push_back(p);
            reach = std::max(reach, std::abs(p));
            const BivarPoly dx = X() - C(rational_from_double(p.real()));
            const BivarPoly dy = Y() - C(rational_from_double(p.imag()));
            pts.push_back(RegionExpr::leaf(dx * dx + dy * dy, Relation::Equal));
        }
        const int r = static_cast<int>(pts.size());
        t.region = r == 1 ? pts.front() : RegionExpr::any_of(std::move(pts));
        TheoryTopology sphere{sb(r, 0, std::vector<int>(r, 0)), sb(0, 0, {}), sb(1, r - 1, {r - 1})};
        TheoryTopology plane{sb(r, 0, std::vector<int>(r, 0)), sb(0, 0, {}), sb(1, r, {r})};
        t.topology = proj ? sphere : plane;
        t.punctured_topology = plane;
        if (proj) t.infinity_stratum = UN;
        t.adjacency = std::vector<StratumEdge>{{UN, S}};
        t.unbounded = std::vector<StratumKind>{UN};
        const double w = std::max(2.0, 1.5 * reach + 0.5);
        t.window = Window{-w, w, -w, w};
    } else {
        throw std::invalid_argument("unknown built-in theory '" + std::string(name) + "'");
    }
    if (!proj) t.infinity_stratum.reset();
    return t;
}

StabilityTheory dualize(const StabilityTheory& t) {
    StabilityTheory d;
    d.name = "dual(" + t.name + ")";
    // f(1/z) in real coordinates is f(x/rho, -y/rho); the cleared numerator differs
    // from it by a positive power of rho, so signs agree away from 0.
    d.region = t.region.map_leaves([](const BivarPoly& f) { return conj_transform(inv_transform(f).poly); });
    d.boundary_tolerance = t.boundary_tolerance;
    if (t.mode == TheoryMode::Projective) {
        d.mode = TheoryMode::Monic;
        d.origin_stratum = t.infinity_stratum;
    } else {
        d.mode = TheoryMode::Projective;
        d.infinity_stratum = classify_point(t, std::complex<double>(0, 0));
    }
    // Inversion moves 0 and infinity, so the declared strata topology does not
    // carry over; an all-zero topology marks it as undeclared.
    d.topology = TheoryTopology{};
    return d;
}

namespace {

void check_betti(const StratumBetti& b, const std::string& where) {
    if (b.b0 < 0 || b.b1 < 0) throw std::invalid_argument(where + ": negative Betti number");
    if (b.b0 == 0 && b.b1 != 0) throw std::invalid_argument(where + ": empty stratum with nonzero b1");
    if (b.component_b1) {
        const auto& c = *b.component_b1;
        if (static_cast<int>(c.size()) != b.b0)
            throw std::invalid_argument(where + ": per-component b1 list has " + std::to_string(c.size()) +
                                        " entries but b0 = " + std::to_string(b.b0));
        long sum = 0;
        for (int v : c) {
            if (v < 0) throw std::invalid_argument(where + ": negative component b1");
            sum += v;
        }
        if (sum != b.b1)
            throw std::invalid_argument(where + ": component b1 values sum to " + std::to_string(sum) +
                                        " but b1 = " + std::to_string(b.b1));
    }
}

}  // namespace

void check_theory_structure(const StabilityTheory& t) {
    if (t.mode == TheoryMode::Projective && !t.infinity_stratum)
        throw std::invalid_argument("projective theory needs an infinity stratum");
    if (t.mode == TheoryMode::Monic && t.infinity_stratum)
        throw std::invalid_argument("monic theory cannot declare an infinity stratum");
    if (!(t.boundary_tolerance >= 0) || !std::isfinite(t.boundary_tolerance))
        throw std::invalid_argument("boundary tolerance must be finite and non-negative");
    if (!(t.window.x0 < t.window.x1) || !(t.window.y0 < t.window.y1))
        throw std::invalid_argument("window must satisfy x0 < x1 and y0 < y1");
    for (StratumKind k : kAllStrata) {
        check_betti(t.topology[k], "topology." + short_name(k));
        if (t.punctured_topology) check_betti((*t.punctured_topology)[k], "punctured_topology." + short_name(k));
    }
    const bool declared = !(t.topology == TheoryTopology{});
    if (declared && t.infinity_stratum && t.topology[*t.infinity_stratum].b0 == 0)
        throw std::invalid_argument("the stratum holding infinity is declared empty");
}

ValidationReport validate_theory(const StabilityTheory& t, int resolution) {
    check_theory_structure(t);
    ValidationReport rep;
    const bool declared = !(t.topology == TheoryTopology{});
    if (!declared) {
        rep.warnings.push_back("strata topology is not declared");
        return rep;
    }
    if (t.topology.s.b0 == 0) rep.warnings.push_back("stable set is declared empty");
    if (t.region.has_equality_leaf()) {
        rep.checks.push_back("numeric check skipped: region has lower-dimensional pieces the raster cannot resolve");
        return rep;
    }
    for (StratumKind k : kAllStrata) {
        const StratumBetti& b = t.topology[k];
        const TopologyEstimate e = estimate_stratum_topology(t, k, t.window, resolution);
        const std::string line = short_name(k) + ": declared (" + std::to_string(b.b0) + "," + std::to_string(b.b1) +
                                 "), estimated (" + std::to_string(e.b0) + "," + std::to_string(e.b1) + ")";
        rep.checks.push_back(line);
        if (e.b0 != b.b0)
            rep.warnings.push_back(short_name(k) + ": declared b0=" + std::to_string(b.b0) + ", estimator found " +
                                   std::to_string(e.b0));
        else if (e.b1 != b.b1)
            rep.warnings.push_back(short_name(k) + ": declared b1=" + std::to_string(b.b1) + ", estimator found " +
                                   std::to_string(e.b1));
    }
    return rep;
}

}  // namespace dstrat
