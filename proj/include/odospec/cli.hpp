#ifndef ODOSPEC_CLI_HPP
#define ODOSPEC_CLI_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "odospec/inverse_g0.hpp"
#include "odospec/opexpr.hpp"
#include "odospec/semigroup.hpp"
#include "odospec/spectral.hpp"

namespace odospec::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "odospec/1";

struct RunConfig {
    int order = 48;
    ExactScalar t0 = ExactScalar(0);
    Tolerances tol;
    bool timing = false;
    std::string format = "json"; // json | text
};

/// "re" or "re,im" with exact rational components, e.g. "-7/2,1".
ExactScalar parse_scalar(const std::string& s);

json scalar_json(const ExactScalar& s);
json series_json(const TaylorSeries& s, int shown = 12);
json op_json(const DiffOp& p, int shown = 12);
json curve_terms_json(const BivarPoly& f);

json cmd_curve(const std::string& p_src, const std::string& q_src, const RunConfig& cfg);
json cmd_verify(const std::string& p_src, const std::string& q_src, const RunConfig& cfg);
json cmd_divisor(const std::string& p_src, const std::string& q_src, const RunConfig& cfg);
json cmd_inverse_g0(const std::string& b1, const std::string& z0_inv, const std::string& kind,
                    const std::string& c, const RunConfig& cfg);
json cmd_semigroup(const std::vector<int>& orders, const RunConfig& cfg);
json cmd_normalize(const std::string& p_src, const std::string& root, const RunConfig& cfg);

std::string render(const json& j, const std::string& format);

/// Exit code classes: 0 ok, 2 parse/usage, 3 non-commuting, 4 non-coprime,
/// 5 tolerance/verification, 6 internal.
int exit_code_for(const std::exception& e);

} // namespace odospec::cli

#endif
