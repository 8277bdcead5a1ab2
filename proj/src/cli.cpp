#include "odospec/cli.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

namespace odospec::cli {

ExactScalar parse_scalar(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return ExactScalar(ExactScalar::parse_rational(s));
    return ExactScalar(ExactScalar::parse_rational(s.substr(0, comma)),
                       ExactScalar::parse_rational(s.substr(comma + 1)));
}

json scalar_json(const ExactScalar& s) {
    return json{{"re", rational_str(s.re())}, {"im", rational_str(s.im())}};
}

json series_json(const TaylorSeries& s, int shown) {
    json coeffs = json::array();
    const int upto = std::min(s.valid_to(), shown - 1);
    for (int k = 0; k <= upto; ++k)
        coeffs.push_back(json::array({rational_str(s.coeff(k).re()), rational_str(s.coeff(k).im())}));
    return json{{"t0", scalar_json(s.base_point())},
                {"coeffs", coeffs},
                {"shown_to", upto},
                {"valid_to", s.valid_to()}};
}

json op_json(const DiffOp& p, int shown) {
    json coeffs = json::array();
    for (int k = 0; k <= (p.is_zero() ? 0 : p.order()); ++k)
        coeffs.push_back(series_json(p.coeff_or_zero(k), shown));
    return json{{"order", p.is_zero() ? json(nullptr) : json(p.order())}, {"coeffs", coeffs}};
}

json curve_terms_json(const BivarPoly& f) {
    json terms = json::array();
    for (const auto& [ij, c] : f.terms)
        terms.push_back(json::array(
            {ij.first, ij.second, rational_str(c.re()), rational_str(c.im())}));
    return terms;
}

namespace {

struct ParsedPair {
    DiffOp p;
    DiffOp q;
    int m = 0;
    int n = 0;
};

ParsedPair load_pair(const std::string& p_src, const std::string& q_src, const RunConfig& cfg) {
    DiffOp p = lower_to_diffop(parse_operator(p_src), cfg.order, cfg.t0);
    DiffOp q = lower_to_diffop(parse_operator(q_src), cfg.order, cfg.t0);
    if (p.is_zero() || q.is_zero()) throw ParseError("operators must be nonzero");
    ParsedPair pair{p, q, p.order(), q.order()};
    if (pair.m < 1 || pair.n < 1)
        throw ParseError("operators must have positive order");
    if (std::gcd(pair.m, pair.n) != 1)
        throw NonCoprimeError("orders (" + std::to_string(pair.m) + "," + std::to_string(pair.n) +
                              ") are not coprime: not a rank-1 pair");
    if (cfg.order < 4 * pair.m * pair.n)
        throw ParseError("truncation order " + std::to_string(cfg.order) +
                         " is below 4*m*n = " + std::to_string(4 * pair.m * pair.n) +
                         "; raise --order");
    return pair;
}

json config_json(const RunConfig& cfg) {
    return json{{"order", cfg.order},
                {"t0", scalar_json(cfg.t0)},
                {"tol_curve", cfg.tol.curve_residual},
                {"tol_cluster", cfg.tol.cluster_radius}};
}

} // namespace

json cmd_curve(const std::string& p_src, const std::string& q_src, const RunConfig& cfg) {
    ParsedPair pair = load_pair(p_src, q_src, cfg);
    SpectralData data = direct_problem(pair.p, pair.q);
    WeightReport wrep = weighted_degree_check(data.curve, pair.q.coeff(pair.n).constant_term());
    json out{{"schema", kSchema}, {"command", "curve"}};
    out["m"] = pair.m;
    out["n"] = pair.n;
    out["config"] = config_json(cfg);
    out["terms"] = curve_terms_json(data.curve.f);
    out["weighted_degree_ok"] = wrep.ok;
    out["c"] = scalar_json(wrep.c);
    out["t_independent"] = true; // bc_polynomial rejects t-dependence
    out["n_eff"] = data.curve.n_eff;
    return out;
}

json cmd_verify(const std::string& p_src, const std::string& q_src, const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    ParsedPair pair = load_pair(p_src, q_src, cfg);
    SpectralData data = direct_problem(pair.p, pair.q);
    VanishReport rep = verify_bc_vanishing(data.curve, pair.p, pair.q);
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() / 1000.0;
    json out{{"schema", kSchema}, {"command", "verify"}};
    out["m"] = pair.m;
    out["n"] = pair.n;
    out["config"] = config_json(cfg);
    out["zero"] = rep.zero;
    out["n_eff"] = rep.n_eff;
    out["offending_power"] = rep.zero ? json(nullptr) : json(rep.offending_power);
    if (cfg.timing) out["wall_time_ms"] = ms;
    fprintf(stderr, "verify wall time: %.3f ms\n", ms);
    if (!rep.zero)
        throw ToleranceError("f(P,Q) is not the zero operator (first nonzero coefficient at D^" +
                             std::to_string(rep.offending_power) + ")");
    return out;
}

json cmd_divisor(const std::string& p_src, const std::string& q_src, const RunConfig& cfg) {
    ParsedPair pair = load_pair(p_src, q_src, cfg);
    SpectralData data = direct_problem(pair.p, pair.q);
    DivisorReport rep = divisor_points(data.mM, data.curve, cfg.tol);
    json out{{"schema", kSchema}, {"command", "divisor"}};
    out["m"] = pair.m;
    out["n"] = pair.n;
    out["config"] = config_json(cfg);
    json pts = json::array();
    for (const auto& pt : rep.points)
        pts.push_back(json{{"lambda", json::array({pt.lambda.real(), pt.lambda.imag()})},
                           {"mu", json::array({pt.mu.real(), pt.mu.imag()})},
                           {"multiplicity", pt.multiplicity},
                           {"residual", pt.residual}});
    out["points"] = pts;
    out["total_degree"] = rep.total_degree;
    out["arithmetic_genus"] = rep.arithmetic_genus;
    out["degree_matches"] = rep.degree_matches;
    return out;
}

json cmd_inverse_g0(const std::string& b1, const std::string& z0_inv, const std::string& kind,
                    const std::string& c, const RunConfig& cfg) {
    GenusZeroSpec spec;
    auto k = kind_from_name(kind);
    if (!k) throw ParseError("kind must be one of smooth|node|cusp, got '" + kind + "'");
    spec.kind = *k;
    spec.b1 = parse_scalar(b1);
    if (!z0_inv.empty()) spec.z0_inv = parse_scalar(z0_inv);
    if (!c.empty()) spec.c = parse_scalar(c);
    if (spec.kind != CurveKind::smooth && z0_inv.empty())
        throw ParseError("node and cusp kinds require --z0-inv");
    if (spec.kind == CurveKind::node && c.empty())
        throw ParseError("node kind requires --c with c^2 = -b1 exactly");
    spec.validate();

    RoundtripReport rep = roundtrip(spec, cfg.order, cfg.t0);
    json out{{"schema", kSchema}, {"command", "inverse-g0"}};
    out["kind"] = kind_name(spec.kind);
    out["b1"] = scalar_json(spec.b1);
    if (spec.kind != CurveKind::smooth) out["z0_inv"] = scalar_json(spec.z0_inv);
    if (spec.kind == CurveKind::node) out["c"] = scalar_json(spec.c);
    out["config"] = config_json(cfg);
    out["P"] = op_json(*rep.p);
    out["Q"] = op_json(*rep.q);
    out["curve"] = curve_terms_json(rep.curve);
    json rt{{"ok", rep.ok},
            {"failed_stage", rep.failed_stage.empty() ? json(nullptr) : json(rep.failed_stage)},
            {"commutator_zero", rep.commutator_zero},
            {"commutator_n_eff", rep.commutator_n_eff},
            {"curve_ok", rep.curve_ok},
            {"ba_oracle_ok", rep.ba_oracle_ok},
            {"model_genus", rep.model_genus},
            {"ba_pole_degree", rep.ba_pole_degree},
            {"model_divisor_ok", rep.model_divisor_ok}};
    if (rep.direct_divisor) {
        rt["direct_divisor"] = json{{"total_degree", rep.direct_divisor->total_degree},
                                    {"arithmetic_genus", rep.direct_divisor->arithmetic_genus},
                                    {"degree_matches", rep.direct_divisor->degree_matches}};
    } else {
        rt["direct_divisor"] = nullptr;
    }
    out["roundtrip"] = rt;
    if (!rep.ok) throw ToleranceError("round trip failed at stage '" + rep.failed_stage + "'");
    return out;
}

json cmd_semigroup(const std::vector<int>& orders, const RunConfig& cfg) {
    if (orders.empty()) throw ParseError("semigroup needs at least one order");
    NumericalSemigroup sg = semigroup_from_generators(orders);
    json out{{"schema", kSchema}, {"command", "semigroup"}};
    out["generators"] = sg.generators;
    out["rank1"] = rank1_check(orders);
    out["coprime"] = sg.coprime;
    out["bound"] = sg.bound;
    out["gaps"] = json(std::vector<int>(sg.gaps.begin(), sg.gaps.end()));
    out["gap_count"] = sg.gaps.size();
    out["gaps_finite"] = sg.coprime;
    out["conductor"] = sg.conductor >= 0 ? json(sg.conductor) : json(nullptr);
    json checks = json::array();
    if (sg.coprime) {
        for (int d = 0; d <= std::min(20, sg.bound - std::max(sg.conductor, 0)); ++d) {
            if (!sg.contains(d)) continue;
            CodimResult res = degree_via_codim(sg, d);
            checks.push_back(json{{"d", d}, {"count", res.count}, {"equals_d", res.equals_d}});
        }
    }
    out["codim_checks"] = checks;
    (void)cfg;
    return out;
}

json cmd_normalize(const std::string& p_src, const std::string& root, const RunConfig& cfg) {
    DiffOp p = lower_to_diffop(parse_operator(p_src), cfg.order, cfg.t0);
    if (p.is_zero()) throw ParseError("cannot normalize the zero operator");
    ExactScalar r = root.empty() ? ExactScalar(1) : parse_scalar(root);
    StandardForm sf = op_standard_form(p, r);
    json out{{"schema", kSchema}, {"command", "normalize"}};
    out["m"] = p.order();
    out["config"] = config_json(cfg);
    out["standard_form"] = op_json(sf.op);
    out["gauge"] = json{{"reparam", series_json(sf.gauge.reparam)},
                        {"gauge", series_json(sf.gauge.gauge)}};
    return out;
}

static void text_lines(const json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            text_lines(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array()) {
        os << prefix << " = " << j.dump() << "\n";
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

std::string render(const json& j, const std::string& format) {
    if (format == "text") {
        std::ostringstream os;
        text_lines(j, "", os);
        return os.str();
    }
    return j.dump(2) + "\n";
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const NonCommutingError*>(&e)) return 3;
    if (dynamic_cast<const NonCoprimeError*>(&e)) return 4;
    if (dynamic_cast<const ToleranceError*>(&e)) return 5;
    return 6;
}

} // namespace odospec::cli
