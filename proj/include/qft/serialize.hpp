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

#include <algorithm>
#include <string>

#include <json.hpp>

#include "qft/format.hpp"
#include "qft/groups.hpp"
#include "qft/moebius.hpp"

namespace qft
{

using Json = nlohmann::ordered_json;

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::domain, "expected [re, im] pair");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline Json matrix_json(const MoebiusMap& m)
{
    return Json::array({Json::array({complex_json(m.a), complex_json(m.b)}),
                        Json::array({complex_json(m.c), complex_json(m.d)})});
}

inline MoebiusMap matrix_from_json(const Json& j)
{
    return {complex_from_json(j.at(0).at(0)), complex_from_json(j.at(0).at(1)),
            complex_from_json(j.at(1).at(0)), complex_from_json(j.at(1).at(1))};
}

inline Json to_json(const FNCoords& c)
{
    Json j;
    j["lambda"] = complex_json(c.lambda());
    j["tau"] = complex_json(c.tau());
    return j;
}

inline FNCoords coords_from_json(const Json& j)
{
    return FNCoords(complex_from_json(j.at("lambda")), complex_from_json(j.at("tau")));
}

inline Json to_json(const GroupData& g)
{
    Json j;
    j["coords"] = to_json(g.coords);
    j["S"] = matrix_json(g.S);
    j["Sprime"] = matrix_json(g.Sprime);
    j["T"] = matrix_json(g.T);
    j["K"] = matrix_json(g.K);
    return j;
}

/// Rebuilds from the coordinates; stored matrices are not trusted.
inline GroupData group_from_json(const Json& j) { return build_group(coords_from_json(j.at("coords"))); }

namespace detail
{
inline void dump_json(std::string& out, const Json& j, int indent, int level)
{
    const auto newline = [&](int lv) {
        if (indent < 0) return;
        out += '\n';
        out.append(std::size_t(indent * lv), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) { out += "{}"; break; }
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                newline(level + 1);
                out += Json(key).dump();
                out += indent < 0 ? ":" : ": ";
                dump_json(out, value, indent, level + 1);
            }
            newline(level);
            out += '}';
            break;
        }
        case Json::value_t::array: {
            if (j.empty()) { out += "[]"; break; }
            // Numeric leaves and arrays of them (complex pairs, matrix rows) stay on one line.
            const auto leafy = [](const Json& e) {
                return e.is_primitive() ||
                       (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); }));
            };
            const bool flat = std::all_of(j.begin(), j.end(), leafy);
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += flat && indent >= 0 ? ", " : ",";
                if (!flat) newline(level + 1);
                dump_json(out, j[i], indent, level + 1);
            }
            if (!flat) newline(level);
            out += ']';
            break;
        }
        case Json::value_t::number_float: out += format_json_real(j.get<double>()); break;
        default: out += j.dump(); break;
    }
}
}  // namespace detail

/** Serialize with every float at 17 significant digits. */
inline std::string dump_json(const Json& j, int indent = 2)
{
    std::string out;
    detail::dump_json(out, j, indent, 0);
    return out;
}

}  // namespace qft
