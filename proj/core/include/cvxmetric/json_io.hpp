#pragma once

#include <string>
#include <vector>

#include "cvxmetric/body.hpp"
#include "cvxmetric/piecewise_affine.hpp"

namespace cvxmetric {

/* Body documents:
 *   {"type": "hpolytope", "A": [[...], ...], "b": [...]}
 *   {"type": "vpolytope", "vertices": [[...], ...]}
 *   {"type": "ball", "center": [...], "radius": r}
 * Malformed JSON raises Error with a line/column diagnostic. */
ConvexBody parse_body_json(const std::string& text);
ConvexBody load_body_file(const std::string& path);
std::string body_to_json(const ConvexBody& body);

/* One point per row, comma separated, no header. */
std::vector<Vector> load_points_csv(const std::string& path);
std::vector<Vector> parse_points_csv(const std::string& text);
Vector parse_point_arg(const std::string& text);

/* 17 significant digits. */
std::string format_real(double v);
/* format_real for finite values, the JSON string "inf" otherwise. */
std::string ext_real_to_json(const ExtReal& v);

std::string fixture_to_json(const ConvexBody& body, const PiecewiseAffineConvexFn& fn);

}  // namespace cvxmetric
