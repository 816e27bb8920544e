#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "se3conv/feature_field.hpp"
#include "se3conv/so3_sampling.hpp"
#include "se3conv/tolerances.hpp"
#include "se3conv/weights.hpp"

namespace se3conv {

// All writers use %.17g, single spaces and LF. Readers skip blank lines and
// '#' comments, reject NaN/Inf and trailing tokens (ParseError).

std::string format_double(double v);
double parse_double(const std::string& tok);
long parse_int(const std::string& tok);

PointCloud read_point_cloud(std::istream& in);
void write_point_cloud(std::ostream& out, const PointCloud& cloud);

// Rows: 9 row-major matrix entries then the weight.
RotationSampleSet read_rotation_set(std::istream& in, const Tolerances& tol = kDefaultTolerances);
void write_rotation_set(std::ostream& out, const RotationSampleSet& set);

FeatureField read_field(std::istream& in);
void write_field(std::ostream& out, const FeatureField& f);

using AnyWeights = std::variant<SE3Weights, TFNWeights>;
// Missing blocks are zero; duplicates and out-of-range headers throw
// BlockHeaderMismatch, triangle-invalid tfn headers TriangleViolation.
AnyWeights read_weights(std::istream& in);
void write_weights(std::ostream& out, const SE3Weights& w);
void write_weights(std::ostream& out, const TFNWeights& v);

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m);

// File wrappers; open failures are ParseError.
PointCloud read_point_cloud_file(const std::string& path);
FeatureField read_field_file(const std::string& path);
AnyWeights read_weights_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace se3conv
