/*
Copyright 2026 The qft Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace qft
{

/** @brief Failure categories raised by the library */
enum class ErrorCode {
    domain,                    ///< argument outside the operation's domain
    degenerate_input,          ///< e.g. fixed points of the identity
    degenerate_normalization,  ///< |e^lambda| = 1, no attracting fixed point
    boundary_degenerate,       ///< both a^2 roots on the unit circle
    out_of_chart,              ///< coordinate change leaves Re(lambda) > 0
    base_case,                 ///< Farey parents of an integer or infinite slope
    branch_cut,                ///< logarithm argument on the negative real axis
    fuchsian_input,            ///< shear requested for a real twist
    search_failure,            ///< footpoint bracket not found
    singular_ray,              ///< d tr / d tau vanished along a ray
    step_too_large,            ///< corrector did not converge
    ray_escaped,               ///< ray left |Im tau| < pi before reaching |tr| = 2
};

inline const char* to_string(ErrorCode c)
{
    switch (c) {
        case ErrorCode::domain: return "domain";
        case ErrorCode::degenerate_input: return "degenerate-input";
        case ErrorCode::degenerate_normalization: return "degenerate-normalization";
        case ErrorCode::boundary_degenerate: return "boundary-degenerate";
        case ErrorCode::out_of_chart: return "out-of-chart";
        case ErrorCode::base_case: return "base-case";
        case ErrorCode::branch_cut: return "branch-cut";
        case ErrorCode::fuchsian_input: return "fuchsian-input";
        case ErrorCode::search_failure: return "search-failure";
        case ErrorCode::singular_ray: return "singular-ray";
        case ErrorCode::step_too_large: return "step-too-large";
        case ErrorCode::ray_escaped: return "ray-escaped";
    }
    return "unknown";
}

/** True for failures of an iterative method rather than of the input. */
inline bool is_numerical(ErrorCode c)
{
    return c == ErrorCode::search_failure || c == ErrorCode::singular_ray ||
           c == ErrorCode::step_too_large || c == ErrorCode::ray_escaped;
}

/** @brief Exception carrying an ErrorCode */
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_{code}
    {
    }
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qft
