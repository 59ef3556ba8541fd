#include "curve_spec.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace sol3cli {

namespace {

[[noreturn]] void fail(const std::string& text, size_t pos, const std::string& what) {
    throw SpecError("'" + text + "': " + what + " at position " + std::to_string(pos));
}

struct Scanner {
    const std::string& text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    std::string ident() {
        const size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-' ||
                           peek() == '_')) {
            ++pos;
        }
        if (pos == start) fail(text, pos, "expected a name");
        return text.substr(start, pos - start);
    }

    double number() {
        double v = 0.0;
        const auto res = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (res.ec != std::errc{}) fail(text, pos, "expected a number");
        pos = res.ptr - text.data();
        return v;
    }

    void expect(char c) {
        if (peek() != c) fail(text, pos, std::string("expected '") + c + "'");
        ++pos;
    }

    std::vector<double> arg_list() {
        std::vector<double> args;
        if (peek() != '(') return args;
        ++pos;
        if (peek() == ')') {
            ++pos;
            return args;
        }
        while (true) {
            args.push_back(number());
            if (peek() == ',') {
                ++pos;
                continue;
            }
            expect(')');
            return args;
        }
    }

    void expect_end() {
        if (!done()) fail(text, pos, "trailing characters");
    }
};

double arg_or(const std::vector<double>& args, size_t i, double fallback) {
    return i < args.size() ? args[i] : fallback;
}

void limit_args(const Scanner& sc, const std::vector<double>& args, size_t n,
                const std::string& kind) {
    if (args.size() > n) {
        fail(sc.text, 0, "'" + kind + "' takes at most " + std::to_string(n) + " parameters");
    }
}

}  // namespace

sol3::CurveFn parse_curve(const std::string& text) {
    Scanner sc{text};
    const std::string kind = sc.ident();
    const std::vector<double> args = sc.arg_list();
    sc.expect_end();

    if (kind == "const") {
        limit_args(sc, args, 1, kind);
        return sol3::curves::constant(arg_or(args, 0, 0.0));
    }
    if (kind == "affine") {
        limit_args(sc, args, 2, kind);
        return sol3::curves::affine(arg_or(args, 0, 1.0), arg_or(args, 1, 0.0));
    }
    if (kind == "poly") {
        if (args.empty()) fail(text, text.size(), "'poly' needs coefficients c0,c1,...");
        return sol3::curves::poly(args);
    }
    if (kind == "log") {
        limit_args(sc, args, 2, kind);
        return sol3::curves::log_abs(arg_or(args, 0, 0.0), arg_or(args, 1, 0.0));
    }
    if (kind == "neglog") {
        limit_args(sc, args, 2, kind);
        return sol3::curves::neg_log_abs(arg_or(args, 0, 0.0), arg_or(args, 1, 0.0));
    }
    if (kind == "scherk") {
        limit_args(sc, args, 3, kind);
        const int branch = static_cast<int>(arg_or(args, 2, 1.0));
        return sol3::scherk_curve(
            sol3::ScherkState::from_slope(arg_or(args, 0, 2.0), arg_or(args, 1, 1.0), branch));
    }
    fail(text, 0, "unknown curve kind '" + kind +
                      "' (expected const, affine, poly, log, neglog or scherk)");
}

sol3::SolutionSpec parse_solution(const std::string& text,
                                  const std::optional<std::string>& f_spec) {
    Scanner sc{text};
    const std::string name = sc.ident();
    const std::vector<double> args = sc.arg_list();
    sc.expect_end();
    std::optional<sol3::CurveFn> f;
    if (f_spec) f = parse_curve(*f_spec);
    try {
        return sol3::make_solution(name, args, f);
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
}

sol3::Interval parse_range(const std::string& text) {
    Scanner sc{text};
    const double lo = sc.number();
    sc.expect(':');
    const double hi = sc.number();
    sc.expect_end();
    if (!(lo < hi)) fail(text, 0, "range must satisfy lo < hi");
    return {lo, hi};
}

}  // namespace sol3cli
