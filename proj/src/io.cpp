#include "torusgf/io.hpp"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace torusgf {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex_json(std::complex<double> v) {
    return "[" + format_double(v.real()) + ", " + format_double(v.imag()) + "]";
}

namespace {

// Parses one signed decimal starting at pos; advances pos past it.
double parse_number(const std::string& s, size_t& pos) {
    size_t next = pos;
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) {
        throw std::invalid_argument("bad complex literal: '" + s + "'");
    }
    next += static_cast<size_t>(end - begin);
    pos = next;
    return v;
}

} // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    size_t pos = 0;
    // pure-imaginary shorthand "i", "+i", "-i"
    auto bare_i = [&](size_t p) {
        return p + 1 == s.size() && s[p] == 'i';
    };
    double first;
    if (bare_i(0)) return {0.0, 1.0};
    if ((s[0] == '+' || s[0] == '-') && bare_i(1)) {
        return {0.0, s[0] == '-' ? -1.0 : 1.0};
    }
    first = parse_number(s, pos);
    if (pos == s.size()) return {first, 0.0};
    if (s[pos] == 'i') {
        if (pos + 1 != s.size()) {
            throw std::invalid_argument("bad complex literal: '" + text + "'");
        }
        return {0.0, first};
    }
    if (s[pos] != '+' && s[pos] != '-') {
        throw std::invalid_argument("bad complex literal: '" + text + "'");
    }
    if (bare_i(pos + 1)) return {first, s[pos] == '-' ? -1.0 : 1.0};
    const double second = parse_number(s, pos);
    if (pos + 1 != s.size() || s[pos] != 'i') {
        throw std::invalid_argument("bad complex literal: '" + text + "'");
    }
    return {first, second};
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    const int workers = std::min(threads, n);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

} // namespace torusgf
