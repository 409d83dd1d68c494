#include "greenwalk/elliptic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "greenwalk/error.hpp"
#include "greenwalk/green_series.hpp"

namespace greenwalk {

double ellint_K(double k) {
    require(k >= 0.0 && k < 1.0, errc::domain_error, "ellint_K: modulus must satisfy 0 <= k < 1");
    double a = 1.0;
    double g = std::sqrt(1.0 - k * k);
    while (std::abs(a - g) > 1e-17 * a) {
        double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
    }
    return M_PI / (2.0 * a);
}

namespace {
constexpr double kCarlsonTol = 1.0e-3;
}

double carlson_rf(double x, double y, double z) {
    require(x >= 0 && y >= 0 && z >= 0 && x + y > 0 && y + z > 0 && z + x > 0, errc::domain_error,
            "carlson_rf: arguments out of range");
    double dx, dy, dz, ave;
    do {
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        ave = (x + y + z) / 3.0;
        dx = (ave - x) / ave;
        dy = (ave - y) / ave;
        dz = (ave - z) / ave;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > kCarlsonTol);
    double e2 = dx * dy - dz * dz;
    double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(ave);
}

double carlson_rc(double x, double y) {
    require(x >= 0 && y > 0, errc::domain_error, "carlson_rc: arguments out of range");
    double dev, ave;
    do {
        double lam = 2.0 * std::sqrt(x) * std::sqrt(y) + y;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        ave = (x + 2.0 * y) / 3.0;
        dev = (y - x) / (3.0 * ave);
    } while (std::abs(dev) > kCarlsonTol);
    double s = dev * dev * (0.3 + dev * (1.0 / 7.0 + dev * (0.375 + dev * 9.0 / 22.0)));
    return (1.0 + s) / std::sqrt(ave);
}

double carlson_rj(double x, double y, double z, double p) {
    require(x >= 0 && y >= 0 && z >= 0 && p > 0 && x + y > 0 && y + z > 0 && z + x > 0,
            errc::domain_error, "carlson_rj: arguments out of range");
    double sum = 0.0;
    double fac = 1.0;
    double dx, dy, dz, dp, ave;
    do {
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * (sy + sz) + sy * sz;
        double alpha = p * (sx + sy + sz) + sx * sy * sz;
        alpha *= alpha;
        double beta = p * (p + lam) * (p + lam);
        sum += fac * carlson_rc(alpha, beta);
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        p = 0.25 * (p + lam);
        ave = (x + y + z + 2.0 * p) / 5.0;
        dx = (ave - x) / ave;
        dy = (ave - y) / ave;
        dz = (ave - z) / ave;
        dp = (ave - p) / ave;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz), std::abs(dp)}) > kCarlsonTol);
    double ea = dx * (dy + dz) + dy * dz;
    double eb = dx * dy * dz;
    double ec = dp * dp;
    double ed = ea - 3.0 * ec;
    double ee = eb + 2.0 * dp * (ea - ec);
    double series = 1.0 + ed * (-3.0 / 14.0 + (9.0 / 88.0) * ed - (9.0 / 52.0) * ee) +
                    eb * (1.0 / 6.0 + dp * (-3.0 / 11.0 + dp * (3.0 / 26.0))) +
                    dp * ea * (1.0 / 3.0 - dp * (3.0 / 22.0)) - (1.0 / 3.0) * dp * ec;
    return 3.0 * sum + fac * series / (ave * std::sqrt(ave));
}

double ellint_Pi(double nchar, double k) {
    require(nchar < 1.0, errc::domain_error, "ellint_Pi: characteristic must be < 1");
    require(k >= 0.0 && k < 1.0, errc::domain_error, "ellint_Pi: modulus must satisfy 0 <= k < 1");
    double kc2 = 1.0 - k * k;
    double value = carlson_rf(0.0, kc2, 1.0);
    if (nchar != 0.0) value += (nchar / 3.0) * carlson_rj(0.0, kc2, 1.0, 1.0 - nchar);
    return value;
}

EllipticAux elliptic_aux(int N, double z) {
    require(N >= 2, errc::domain_error, "elliptic_aux: N must be >= 2");
    require(z >= 0.0, errc::domain_error, "elliptic_aux: z must be >= 0");
    double x = static_cast<double>(N) * N * z * z;
    double y = static_cast<double>(N - 1) * z * z;
    require(x <= 4.0 && y <= 1.0, errc::domain_error, "elliptic_aux: z beyond the branch point");
    EllipticAux a;
    a.N = N;
    a.z = z;
    a.w4 = 8.0 - x + 4.0 * std::sqrt(4.0 - x);
    a.w3 = x * x / a.w4; // conjugate form of 8 - x - 4 sqrt(4 - x)
    a.w6 = 2.0 - y + 2.0 * std::sqrt(1.0 - y);
    a.w5 = y * y / a.w6; // conjugate form of 2 - y - 2 sqrt(1 - y)
    return a;
}

double green22_eval(double z) {
    require(z >= 0.0 && z < 1.0, errc::domain_error, "green22_eval: need 0 <= z < 1");
    double root = 2.0 - z * z + 2.0 * std::sqrt(1.0 - z * z);
    double modulus = z * z / root; // sqrt((2-z^2-2sqrt(1-z^2))/root), stabilized
    return 4.0 / (M_PI * std::sqrt(root)) * ellint_K(modulus);
}

namespace {

constexpr double kSmallZThreshold = 0.05;
constexpr int kSeriesFallbackTerms = 60;

const std::vector<Rat>& series_coefficients(int N) {
    static std::mutex mu;
    static std::map<int, std::vector<Rat>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end()) {
        WalkSpec spec(std::vector<int>(N, 2));
        GreenSeries gs = green_series(spec, kSeriesFallbackTerms);
        it = cache.emplace(N, gs.p).first;
    }
    return it->second;
}

double series_partial_sum(int N, double z) {
    const auto& p = series_coefficients(N);
    double sum = 0.0, zp = 1.0;
    for (const Rat& c : p) {
        sum += c.get_d() * zp;
        zp *= z;
    }
    return sum;
}

} // namespace

double green2n2_eval(int N, double z) {
    require(N >= 2, errc::domain_error, "green2n2_eval: N must be >= 2");
    require(z >= 0.0, errc::domain_error, "green2n2_eval: z must be >= 0");
    // w3 = O(z^4) makes the Pi difference a 0/0 limit near the origin; the
    // series is both exact and cheap there.
    if (z < kSmallZThreshold) return series_partial_sum(N, z);

    EllipticAux a = elliptic_aux(N, z);
    double x = static_cast<double>(N) * N * z * z;
    double modulus = a.w5 > 0.0 ? std::sqrt(a.w5 / a.w6) : 0.0;
    require(modulus < 1.0, errc::domain_error, "green2n2_eval: modulus at or beyond 1");
    double bracket = (N - 1) * ellint_K(modulus);
    if (N > 2) {
        // Characteristics N^2 w5 / ((N-1) w4) and N^2 w5 / ((N-1) w3); the
        // second simplifies exactly to (N-1) w4 / (N^2 w6).
        double n1 = static_cast<double>(N) * N * a.w5 / ((N - 1) * a.w4);
        double n2 = (N - 1) * a.w4 / (static_cast<double>(N) * N * a.w6);
        require(n1 < 1.0 && n2 < 1.0, errc::domain_error,
                "green2n2_eval: characteristic at or beyond 1");
        require(x < 4.0, errc::domain_error, "green2n2_eval: z at the outer branch point");
        double pref = (N - 2.0) * (N - 2.0) / (2.0 * std::sqrt(4.0 - x));
        bracket += pref * (ellint_Pi(n1, modulus) - ellint_Pi(n2, modulus));
    }
    return 8.0 / (N * M_PI * std::sqrt(a.w6)) * bracket;
}

} // namespace greenwalk
