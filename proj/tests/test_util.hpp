#pragma once

#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>

#include "quintic/rings.hpp"

// Deterministic generators for the randomized algebra suites, plus a tiny
// process runner for driving the CLI binary.
namespace testutil {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x51a3b5ecULL);
    return gen;
}

inline long rand_long(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline quintic::Rational rand_rational() {
    return quintic::Rational(rand_long(-999, 999), rand_long(1, 99));
}

inline quintic::GaussianInt rand_gaussian_int() {
    return quintic::GaussianInt(rand_long(-1000, 1000), rand_long(-1000, 1000));
}

inline quintic::GaussianRational rand_gaussian_rational() {
    return quintic::GaussianRational(rand_rational(), rand_rational());
}

inline quintic::QuadElem rand_quad() {
    return quintic::QuadElem(rand_rational(), rand_rational());
}

inline quintic::BiquadElem rand_biquad() {
    return quintic::BiquadElem(rand_rational(), rand_rational(), rand_rational(),
                               rand_rational());
}

struct CmdResult {
    int status = -1;       // process exit code, or -1 if it did not exit normally
    std::string out;       // captured stdout
};

inline CmdResult run_cmd(const std::string& cmd) {
    CmdResult result;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    int raw = pclose(pipe);
    if (WIFEXITED(raw)) result.status = WEXITSTATUS(raw);
    return result;
}

}  // namespace testutil
