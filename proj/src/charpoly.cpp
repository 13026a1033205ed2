#include "poscert/charpoly.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "poscert/errors.hpp"
#include "poscert/resultant.hpp"

namespace poscert {

namespace {

constexpr int kMaxNodeAttempts = 8;

Rat pencil_value(const HomogPoly& F, const HomogPoly& J, const Rat& t) {
    return discriminant(F + J.scale(t));
}

// Node t_k = k, replaced by j(D+1)+k on the j-th retry after a degenerate
// specialization. All candidates are distinct across (j, k).
Rat node_value(const HomogPoly& F, const HomogPoly& J, int D, int k, Rat& node_out) {
    for (int attempt = 0;; ++attempt) {
        const Rat t = attempt * (D + 1) + k;
        try {
            const Rat v = pencil_value(F, J, t);
            node_out = t;
            return v;
        } catch (const degenerate_specialization_error&) {
            if (attempt + 1 >= kMaxNodeAttempts) throw;
        }
    }
}

}  // namespace

namespace {

UniPoly pencil_char_poly(const HomogPoly& F, bool parallel);

}  // namespace

UniPoly char_poly(const HomogPoly& F, bool parallel) {
    if (F.degree() < 2 || F.degree() % 2 != 0)
        throw std::invalid_argument("char_poly requires even degree >= 2");
    return pencil_char_poly(F, parallel);
}

Rat robust_discriminant(const HomogPoly& F) {
    try {
        return discriminant(F);
    } catch (const degenerate_specialization_error&) {
        return pencil_char_poly(F, false).coeff(0);
    }
}

namespace {

UniPoly pencil_char_poly(const HomogPoly& F, bool parallel) {
    const int n = F.var_count();
    const int d = F.degree();
    const Int D_big = discriminant_degree(n, d);
    if (!D_big.fits_sint_p())
        throw capacity_error("characteristic polynomial degree " + to_string(D_big) +
                             " is out of range");
    const int D = static_cast<int>(D_big.get_si());

    const HomogPoly J = HomogPoly::reference_form(n, d);
    const int count = D + 1;
    std::vector<Rat> nodes(count), values(count);

    if (!parallel) {
        for (int k = 0; k < count; ++k) values[k] = node_value(F, J, D, k, nodes[k]);
    } else {
        // First sweep in worker threads; degenerate nodes are redone
        // sequentially so the retry schedule stays deterministic.
        std::vector<char> needs_retry(count, 0);
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mtx;
        auto worker = [&] {
            for (int k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
                try {
                    values[k] = pencil_value(F, J, Rat(k));
                    nodes[k] = k;
                } catch (const degenerate_specialization_error&) {
                    needs_retry[k] = 1;
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mtx);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        const unsigned workers =
            std::max(1u, std::min(std::thread::hardware_concurrency(),
                                  static_cast<unsigned>(count)));
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
        for (int k = 0; k < count; ++k)
            if (needs_retry[k]) values[k] = node_value(F, J, D, k, nodes[k]);
    }

    const UniPoly chi = lagrange_interpolate(nodes, values);

    // Re-evaluate at a node not used for interpolation; a silent degenerate
    // minor would surface here.
    Rat max_node = nodes[0];
    for (const Rat& t : nodes) max_node = std::max(max_node, t);
    Rat check = max_node + 1;
    for (int attempt = 0;; ++attempt) {
        try {
            if (chi(check) != pencil_value(F, J, check))
                throw std::logic_error("char_poly verification failed at fresh node");
            break;
        } catch (const degenerate_specialization_error&) {
            if (attempt + 1 >= kMaxNodeAttempts) throw;
            check += 1;
        }
    }

    if (chi.degree() != D || chi.leading() != 1)
        throw std::logic_error("char_poly invariant violated: result is not monic of degree " +
                               std::to_string(D));
    return chi;
}

}  // namespace

UniPoly char_poly_on_subspace(const HomogPoly& F, const std::vector<int>& keep, bool parallel) {
    return char_poly(F.restrict(keep), parallel);
}

Rat generalized_char_eval(const HomogPoly& F, const std::vector<HomogPoly>& Js,
                          const std::vector<Rat>& ts) {
    if (Js.size() != ts.size())
        throw std::invalid_argument("generalized_char_eval: Js and ts lengths differ");
    HomogPoly pencil = F;
    for (size_t i = 0; i < Js.size(); ++i) {
        if (Js[i].var_count() != F.var_count() || Js[i].degree() != F.degree())
            throw std::invalid_argument("generalized_char_eval: forms live in different spaces");
        pencil = pencil + Js[i].scale(ts[i]);
    }
    return discriminant(pencil);
}

}  // namespace poscert
