#include "rr1/util.hpp"

#include "rr1/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace rr1 {

namespace {

bool is_imag_unit(char c) { return c == 'j' || c == 'i' || c == 'J' || c == 'I'; }

// Consumes an optional sign. Returns +1.0 / -1.0.
double take_sign(const std::string& s, size_t& pos) {
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
        return s[pos++] == '-' ? -1.0 : 1.0;
    return 1.0;
}

// Consumes an unsigned decimal number starting at pos (from_chars rejects a
// leading '+', so signs are handled by take_sign).
bool take_number(const std::string& s, size_t& pos, double& out) {
    const char* begin = s.data() + pos;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin) return false;
    pos += static_cast<size_t>(ptr - begin);
    return true;
}

} // namespace

Complex parse_complex(const std::string& token) {
    size_t a = 0, b = token.size();
    while (a < b && std::isspace(static_cast<unsigned char>(token[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(token[b - 1]))) --b;
    std::string s = token.substr(a, b - a);
    if (s.empty()) throw ParseError("empty complex token", 0, 0);

    auto fail = [&]() -> Complex {
        throw ParseError("cannot parse complex token '" + s + "'", 0, 0);
    };

    // Grammar: [s]j | [s]N | [s]Nj | [s]N s j | [s]N s Mj  (s: sign, N/M: numbers)
    size_t pos = 0;
    double sign1 = take_sign(s, pos);
    if (pos < s.size() && is_imag_unit(s[pos])) {
        return pos + 1 == s.size() ? Complex(0.0, sign1) : fail();
    }
    double first = 0.0;
    if (!take_number(s, pos, first)) return fail();
    first *= sign1;
    if (pos == s.size()) return Complex(first, 0.0);
    if (is_imag_unit(s[pos]))
        return pos + 1 == s.size() ? Complex(0.0, first) : fail();

    if (s[pos] != '+' && s[pos] != '-') return fail();
    double sign2 = take_sign(s, pos);
    if (pos < s.size() && is_imag_unit(s[pos]))
        return pos + 1 == s.size() ? Complex(first, sign2) : fail();
    double second = 0.0;
    if (!take_number(s, pos, second)) return fail();
    if (pos + 1 != s.size() || !is_imag_unit(s[pos])) return fail();
    return Complex(first, sign2 * second);
}

std::string format_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(Complex z) {
    std::string out = format_full(z.real());
    if (z.imag() >= 0 || std::isnan(z.imag())) out += "+";
    out += format_full(z.imag());
    out += "j";
    return out;
}

namespace detail {

int thread_count() {
    if (const char* env = std::getenv("RR1_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

} // namespace detail

void parallel_for(int n, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    int workers = std::min(detail::thread_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (int w = 0; w < workers; ++w) {
        int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
        int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
        pool.emplace_back([&, lo, hi]() {
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace rr1
