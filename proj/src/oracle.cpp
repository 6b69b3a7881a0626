#include "divpair/oracle.hpp"

#include <algorithm>
#include <future>

namespace divpair::oracle {

bool verify_triple(const DivisorTriple& t, bool require_gt1) {
    if (t.n < 1 || mpz_even_p(t.n.get_mpz_t()))
        throw std::invalid_argument("verify_triple: n must be odd and positive");
    Int floor = require_gt1 ? 1 : 0;
    if (t.d1 <= floor || t.d2 <= floor) return false;
    Int half = (t.n * t.n + 1) / 2;
    if (!mpz_divisible_p(half.get_mpz_t(), t.d1.get_mpz_t())) return false;
    if (!mpz_divisible_p(half.get_mpz_t(), t.d2.get_mpz_t())) return false;
    return t.d1 + t.d2 == Int(t.delta) * t.n + t.epsilon;
}

std::vector<std::pair<Int, Int>> find_divisor_pairs(const Int& n, long delta, long epsilon,
                                                    std::uint64_t rho_budget) {
    if (n < 1 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("find_divisor_pairs: n must be odd and positive");
    Int half = (n * n + 1) / 2;
    Int target = Int(delta) * n + epsilon;
    std::vector<std::pair<Int, Int>> pairs;
    for (const Int& d1 : arith::divisors(half, rho_budget)) {
        Int d2 = target - d1;
        if (d2 < d1) break;
        if (d2 >= 1 && mpz_divisible_p(half.get_mpz_t(), d2.get_mpz_t()))
            pairs.emplace_back(d1, d2);
    }
    return pairs;
}

ScanResult scan(long delta, long epsilon, const Int& n_max, bool require_gt1,
                unsigned workers, std::uint64_t rho_budget) {
    if (n_max < 1) throw std::invalid_argument("scan: n_max must be positive");
    if (workers < 1) workers = 1;
    ScanResult res;
    res.delta = delta;
    res.epsilon = epsilon;
    res.n_max = n_max;

    unsigned long total = Int((n_max + 1) / 2).get_ui();  // odd n = 2i+1, i in [0, total)

    struct Block {
        std::vector<DivisorTriple> witnesses;
        unsigned long scanned = 0;
        std::optional<Int> stopped_at;
    };
    auto scan_block = [&](unsigned long lo, unsigned long hi) {
        Block blk;
        for (unsigned long i = lo; i < hi; ++i) {
            Int n = 2 * Int(i) + 1;
            try {
                for (auto& [d1, d2] : find_divisor_pairs(n, delta, epsilon, rho_budget)) {
                    DivisorTriple t{n, d1, d2, delta, epsilon};
                    if (!require_gt1 || (d1 > 1 && d2 > 1)) blk.witnesses.push_back(std::move(t));
                }
            } catch (const BudgetError&) {
                blk.stopped_at = n;
                break;
            }
            ++blk.scanned;
        }
        return blk;
    };

    std::vector<Block> blocks;
    if (workers == 1 || total < 2 * workers) {
        blocks.push_back(scan_block(0, total));
    } else {
        unsigned long step = (total + workers - 1) / workers;
        std::vector<std::future<Block>> futures;
        for (unsigned w = 0; w < workers; ++w) {
            unsigned long lo = w * step;
            unsigned long hi = std::min(total, lo + step);
            if (lo >= hi) break;
            futures.push_back(std::async(std::launch::async, scan_block, lo, hi));
        }
        for (auto& f : futures) blocks.push_back(f.get());
    }
    for (auto& blk : blocks) {
        res.scanned += blk.scanned;
        for (auto& w : blk.witnesses) res.witnesses.push_back(std::move(w));
        if (blk.stopped_at && !res.stopped_at) res.stopped_at = blk.stopped_at;
    }
    return res;
}

}  // namespace divpair::oracle
