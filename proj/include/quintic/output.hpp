#pragma once

#include <string>

#include "quintic/solutions.hpp"

namespace quintic {

/*
 * Flat, serialization-ready view of a SolutionRecord.  Components are
 * decimal strings (optional leading '-', arbitrary length, never
 * scientific notation): they outgrow 64-bit integers within a dozen terms,
 * so JSON consumers get strings instead of numeric tokens.
 */
struct OutputRecord {
    unsigned long n = 0;
    std::string a;
    std::string b_re, b_im;
    std::string c_re, c_im;
    int sign = 1;
    bool verified = false;
};

OutputRecord to_output_record(const SolutionRecord& rec, bool verified);

// One JSON object per line, fixed key order, streamable.
std::string to_json_line(const OutputRecord& rec);

// CSV with the fixed column order n,a,b_re,b_im,c_re,c_im,sign,verified.
std::string csv_header();
std::string to_csv_row(const OutputRecord& rec);

}  // namespace quintic
