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
// A short tour: build a group, read off traces, trace a pleating ray and
// render a small limit set.

#include <fstream>
#include <iostream>

#include "qft/qft.hpp"

int main()
{
    using namespace qft;
    const double lambda = std::log(2.0);

    // A bent group in the lambda = ln 2 slice.
    const FNCoords coords(lambda, Complex{0.0, 0.5});
    const GroupData g = build_group(coords);
    std::cout << "tr T = " << format_real(g.T.trace().real()) << " + " << format_real(g.T.trace().imag()) << "i\n";
    std::cout << "tr K = " << format_real(g.K.trace().real()) << '\n';
    std::cout << "tame: " << std::boolalpha << is_tame(coords) << " (theta0 = " << format_real(theta0(lambda)) << ")\n";

    // Farey words and their traces.
    for (const Slope& s : {Slope(0, 1), Slope(1, 2), Slope(2, 3)})
        std::cout << "W_" << s.str() << " = " << word(s).str() << ", tr = " << format_real(trace_slope(s, coords).real())
                  << '\n';

    // The 1/2 pleating ray, from the Fuchsian line to |tr| = 2.
    const PleatingRay ray = trace_ray(lambda, Slope(1, 2), RaySide::top);
    std::cout << "ray 1/2: footpoint " << format_real(ray.footpoint) << ", " << ray.samples.size()
              << " samples, ends at " << format_real(ray.endpoint.real()) << " + " << format_real(ray.endpoint.imag())
              << "i\n";

    // Limit set as a point cloud and a PPM.
    RenderConfig cfg;
    cfg.max_word_length = 30;
    cfg.contraction_eps = 0.02;
    cfg.viewport = {-7.0, 7.0, -1.0, 13.0};
    cfg.width = cfg.height = 256;
    const PointSet ps = limit_points(g, cfg);
    const std::string name = limitset_filename(lambda, coords.tau(), "ppm");
    std::ofstream out(name, std::ios::binary);
    write_ppm(out, rasterize(ps, cfg));
    std::cout << ps.points.size() << " limit points written to " << name << '\n';
}
