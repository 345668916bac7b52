#include "quintic/output.hpp"

#include <sstream>

namespace quintic {

OutputRecord to_output_record(const SolutionRecord& rec, bool verified) {
    OutputRecord out;
    out.n = rec.n;
    out.a = rec.a.re().get_str();
    out.b_re = rec.b.re().get_str();
    out.b_im = rec.b.im().get_str();
    out.c_re = rec.c.re().get_str();
    out.c_im = rec.c.im().get_str();
    out.sign = rec.sign;
    out.verified = verified;
    return out;
}

std::string to_json_line(const OutputRecord& rec) {
    std::ostringstream os;
    os << "{\"n\":" << rec.n << ",\"a\":\"" << rec.a << "\",\"b_re\":\"" << rec.b_re
       << "\",\"b_im\":\"" << rec.b_im << "\",\"c_re\":\"" << rec.c_re << "\",\"c_im\":\""
       << rec.c_im << "\",\"sign\":" << rec.sign
       << ",\"verified\":" << (rec.verified ? "true" : "false") << "}";
    return os.str();
}

std::string csv_header() { return "n,a,b_re,b_im,c_re,c_im,sign,verified"; }

std::string to_csv_row(const OutputRecord& rec) {
    std::ostringstream os;
    os << rec.n << ',' << rec.a << ',' << rec.b_re << ',' << rec.b_im << ',' << rec.c_re << ','
       << rec.c_im << ',' << rec.sign << ',' << (rec.verified ? "true" : "false");
    return os.str();
}

}  // namespace quintic
