#pragma once

// Text formats:
//   matrix file   first line "n", then n lines of n rationals ("a" or "a/b")
//   flag spec     "<small vectors>:<big vectors>", vectors separated by ';',
//                 entries by ',', e.g. "1,0,0,0:1,0,0,0;0,1,0,0"

#include <istream>
#include <string>
#include <string_view>

#include "h3m/forms.hpp"

namespace h3m {

Mat parse_matrix(std::istream& in);
Mat read_matrix_file(const std::string& path);
std::string format_matrix(const Mat& m);  // inverse of parse_matrix

std::vector<Vec> parse_vectors(std::string_view text);
Flag parse_flag(std::string_view spec);
std::string format_flag(const Flag& f);

} // namespace h3m
