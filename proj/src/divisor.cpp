#include "zhardy/divisor.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zhardy {

namespace {
// Two u64 arrays live during a convolution pass.
constexpr std::uint64_t kSieveBudget = 2ull << 30;

std::uint64_t table_bytes(std::uint64_t N) { return 16 * (N + 1); }
}  // namespace

std::uint64_t DivisorTable::at(std::uint64_t n) const {
    if (n == 0 || n > limit)
        throw ResourceError("divisor table covers n <= " + std::to_string(limit) +
                                ", need n = " + std::to_string(n),
                            8 * (n + 1));
    return values[n];
}

DivisorTable sieve_dk(unsigned k, std::uint64_t N) {
    if (k < 1) throw std::domain_error("sieve_dk: k must be >= 1");
    if (N < 1) throw std::domain_error("sieve_dk: N must be >= 1");
    if (table_bytes(N) > kSieveBudget)
        throw ResourceError("sieve_dk: N = " + std::to_string(N) + " exceeds the sieve budget",
                            table_bytes(N));

    std::vector<std::uint64_t> cur(N + 1, 1);  // d_1
    cur[0] = 0;
    for (unsigned pass = 1; pass < k; ++pass) {
        std::vector<std::uint64_t> next(N + 1, 0);
        for (std::uint64_t m = 1; m <= N; ++m)
            for (std::uint64_t j = m; j <= N; j += m) next[j] += cur[m];
        cur = std::move(next);
    }
    return {k, N, std::move(cur)};
}

void save_dk(const DivisorTable& table, const std::filesystem::path& file) {
    std::FILE* fp = std::fopen(file.string().c_str(), "wb");
    if (!fp) throw std::runtime_error("save_dk: cannot open " + file.string());
    const std::uint32_t k32 = table.k;
    const std::uint64_t n64 = table.limit;
    bool ok = std::fwrite("DKT1", 1, 4, fp) == 4 &&
              std::fwrite(&k32, sizeof k32, 1, fp) == 1 &&
              std::fwrite(&n64, sizeof n64, 1, fp) == 1 &&
              std::fwrite(table.values.data() + 1, sizeof(std::uint64_t), table.limit, fp) ==
                  table.limit;
    ok = std::fclose(fp) == 0 && ok;
    if (!ok) throw std::runtime_error("save_dk: short write to " + file.string());
}

std::optional<DivisorTable> load_dk(const std::filesystem::path& file) {
    std::FILE* fp = std::fopen(file.string().c_str(), "rb");
    if (!fp) return std::nullopt;
    char magic[4];
    std::uint32_t k32 = 0;
    std::uint64_t n64 = 0;
    DivisorTable table;
    bool ok = std::fread(magic, 1, 4, fp) == 4 && std::memcmp(magic, "DKT1", 4) == 0 &&
              std::fread(&k32, sizeof k32, 1, fp) == 1 &&
              std::fread(&n64, sizeof n64, 1, fp) == 1 && n64 >= 1 &&
              table_bytes(n64) <= kSieveBudget;
    if (ok) {
        table.k = k32;
        table.limit = n64;
        table.values.assign(n64 + 1, 0);
        ok = std::fread(table.values.data() + 1, sizeof(std::uint64_t), n64, fp) == n64;
    }
    std::fclose(fp);
    if (!ok) return std::nullopt;
    return table;
}

DivisorTable dk_cached(unsigned k, std::uint64_t N, const std::filesystem::path& dir) {
    if (dir.empty()) return sieve_dk(k, N);
    const auto file = dir / ("d" + std::to_string(k) + ".dkt");
    if (auto cached = load_dk(file); cached && cached->k == k && cached->limit >= N) {
        cached->values.resize(N + 1);
        cached->limit = N;
        return std::move(*cached);
    }
    DivisorTable table = sieve_dk(k, N);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) save_dk(table, file);
    return table;
}

double rho_eval(double x, const TestFunction& f) {
    if (!(f.b > 1.0)) throw std::domain_error("rho_eval: requires b > 1");
    if (!(x >= 0.0)) throw std::domain_error("rho_eval: requires x >= 0");
    if (x * f.b <= 1.0) return 1.0;
    if (x >= f.b) return 0.0;
    const double u = std::log(x) / std::log(f.b);
    if (u <= -1.0) return 1.0;
    if (u >= 1.0) return 0.0;
    return 0.5 * (1.0 - std::sin(0.5 * std::numbers::pi * u));
}

ShiftWeight shift_weight(std::uint64_t n, double U, const DivisorTable& d2) {
    if (n < 1) throw std::domain_error("shift_weight: requires n >= 1");
    if (!(U >= 0.0)) throw std::domain_error("shift_weight: requires U >= 0");
    if (d2.k != 2) throw std::domain_error("shift_weight: needs a k=2 divisor table");
    if (n > d2.limit)
        throw ResourceError("shift_weight: divisor table covers n <= " +
                                std::to_string(d2.limit) + ", need n = " + std::to_string(n),
                            8 * (n + 1));

    std::complex<double> sum = 0.0;
    auto add = [&](std::uint64_t delta) {
        const double ph = U * std::log(static_cast<double>(delta));
        sum += static_cast<double>(d2.values[delta]) *
               std::complex<double>(std::cos(ph), std::sin(ph));
    };
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        add(d);
        if (d * d != n) add(n / d);
    }
    const double ph = U * std::log(static_cast<double>(n));
    return {n, U, sum * std::complex<double>(std::cos(ph), -std::sin(ph))};
}

}  // namespace zhardy
