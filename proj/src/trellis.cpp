#include "freedist/trellis.hpp"

#include <algorithm>
#include <cassert>

namespace freedist {

using galois::Elem;
using galois::Field;

namespace {
constexpr std::uint64_t kMaxBranching = 1ull << 22;
constexpr std::uint64_t kMaxContribElems = 1ull << 26;
}  // namespace

Trellis::Trellis(const GeneratorMatrix& G)
    : field_(G.field), k_(G.k), n_(G.n), q_(G.field->q()) {
    if (!is_row_reduced(G)) throw NotRowReduced("the trellis requires a row-reduced generator matrix");
    nu_ = row_degrees(G);
    M_ = *std::max_element(nu_.begin(), nu_.end());
    delta_ = 0;
    for (int v : nu_) delta_ += v;

    for (std::size_t i = 0; i < k_; ++i) {
        num_inputs_ *= q_;
        if (num_inputs_ > kMaxBranching) throw StateSpaceTooLarge("q^k exceeds the supported branching factor");
    }
    input_pow_.assign(k_, 1);
    for (std::size_t i = 0; i + 1 < k_; ++i) input_pow_[k_ - 2 - i] = input_pow_[k_ - 1 - i] * q_;

    // States are packed into 64-bit integers, so q^delta must fit.
    for (int d = 0; d < delta_; ++d) {
        if (num_states_ > (1ull << 62) / q_)
            throw StateSpaceTooLarge("q^delta does not fit in 62 bits");
        num_states_ *= q_;
    }
    row_size_.resize(k_);
    row_base_.resize(k_);
    std::uint64_t base = 1;
    for (std::size_t i = 0; i < k_; ++i) {
        row_base_[i] = base;
        std::uint64_t sz = 1;
        for (int d = 0; d < nu_[i]; ++d) sz *= q_;
        row_size_[i] = sz;
        base *= sz;
    }

    coeff_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        coeff_[i].assign(n_ * static_cast<std::size_t>(nu_[i] + 1), 0);
        for (std::size_t j = 0; j < n_; ++j)
            for (int d = 0; d <= nu_[i]; ++d)
                coeff_[i][j * static_cast<std::size_t>(nu_[i] + 1) + static_cast<std::size_t>(d)] =
                    G.at(i, j).coeff(d);
    }

    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k_; ++i) {
        const std::uint64_t entries = row_size_[i] * q_ * n_;
        total += entries;
        if (total > kMaxContribElems) throw StateSpaceTooLarge("per-row output tables exceed the memory cap");
    }
    const Field& F = *field_;
    contrib_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        contrib_[i].assign(static_cast<std::size_t>(row_size_[i] * q_ * n_), 0);
        std::vector<Elem> cells(static_cast<std::size_t>(nu_[i]), 0);
        for (std::uint64_t reg = 0; reg < row_size_[i]; ++reg) {
            std::uint64_t t = reg;
            for (int d = 0; d < nu_[i]; ++d) {
                cells[static_cast<std::size_t>(d)] = static_cast<Elem>(t % q_);
                t /= q_;
            }
            for (std::uint32_t u = 0; u < q_; ++u) {
                const std::size_t slot = static_cast<std::size_t>((reg * q_ + u) * n_);
                for (std::size_t j = 0; j < n_; ++j) {
                    const Elem* g = &coeff_[i][j * static_cast<std::size_t>(nu_[i] + 1)];
                    Elem acc = F.mul(static_cast<Elem>(u), g[0]);
                    for (int d = 1; d <= nu_[i]; ++d)
                        acc = F.add(acc, F.mul(cells[static_cast<std::size_t>(d - 1)], g[d]));
                    contrib_[i][slot + j] = acc;
                }
            }
        }
    }
}

std::uint64_t Trellis::num_states() const { return num_states_; }

Trellis::Step Trellis::forward_step(std::uint64_t from, std::uint64_t input_index) const {
    const Field& F = *field_;
    std::uint64_t to = 0;
    // Per-row contribution slots for the weight pass below.
    std::uint64_t slot[64];
    assert(k_ <= 64);
    for (std::size_t i = 0; i < k_; ++i) {
        const std::uint64_t r = (from / row_base_[i]) % row_size_[i];
        const std::uint64_t u = (input_index / input_pow_[i]) % q_;
        slot[i] = (r * q_ + u) * n_;
        if (nu_[i] > 0) {
            const std::uint64_t kept = r % (row_size_[i] / q_);
            to += (u + kept * q_) * row_base_[i];
        }
    }
    int w = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        Elem acc = contrib_[0][slot[0] + j];
        for (std::size_t i = 1; i < k_; ++i) acc = F.add(acc, contrib_[i][slot[i] + j]);
        w += (acc != 0);
    }
    return {to, w};
}

Trellis::Step Trellis::backward_step(std::uint64_t to, std::uint64_t ext_index) const {
    const Field& F = *field_;
    std::uint64_t from = 0;
    std::uint64_t slot[64];
    assert(k_ <= 64);
    for (std::size_t i = 0; i < k_; ++i) {
        const std::uint64_t r_to = (to / row_base_[i]) % row_size_[i];
        const std::uint64_t e = (ext_index / input_pow_[i]) % q_;
        std::uint64_t u, r_from;
        if (nu_[i] == 0) {
            u = e;
            r_from = 0;
        } else {
            u = r_to % q_;                                   // the edge input is the newest cell of `to`
            r_from = r_to / q_ + e * (row_size_[i] / q_);    // shift back, new oldest cell = e
        }
        slot[i] = (r_from * q_ + u) * n_;
        from += r_from * row_base_[i];
    }
    int w = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        Elem acc = contrib_[0][slot[0] + j];
        for (std::size_t i = 1; i < k_; ++i) acc = F.add(acc, contrib_[i][slot[i] + j]);
        w += (acc != 0);
    }
    return {from, w};
}

Transition Trellis::transition(std::uint64_t from, std::uint64_t input_index) const {
    const Field& F = *field_;
    Transition t;
    t.from = from;
    t.input.resize(k_);
    t.output.assign(n_, 0);
    std::uint64_t to = 0;
    for (std::size_t i = 0; i < k_; ++i) {
        const std::uint64_t r = (from / row_base_[i]) % row_size_[i];
        const Elem u = static_cast<Elem>((input_index / input_pow_[i]) % q_);
        t.input[i] = u;
        std::uint64_t cells = r;
        for (std::size_t j = 0; j < n_; ++j) {
            const Elem* g = &coeff_[i][j * static_cast<std::size_t>(nu_[i] + 1)];
            Elem acc = F.mul(u, g[0]);
            std::uint64_t cc = cells;
            for (int d = 1; d <= nu_[i]; ++d) {
                acc = F.add(acc, F.mul(static_cast<Elem>(cc % q_), g[d]));
                cc /= q_;
            }
            t.output[j] = F.add(t.output[j], acc);
        }
        if (nu_[i] > 0) to += (u + (r % (row_size_[i] / q_)) * q_) * row_base_[i];
    }
    t.to = to;
    t.weight = 0;
    for (auto o : t.output) t.weight += (o != 0);
    return t;
}

std::vector<Transition> Trellis::forward_extensions(std::uint64_t state) const {
    std::vector<Transition> out;
    out.reserve(static_cast<std::size_t>(num_inputs_));
    for (std::uint64_t idx = 0; idx < num_inputs_; ++idx) out.push_back(transition(state, idx));
    return out;
}

std::vector<Transition> Trellis::backward_extensions(std::uint64_t state) const {
    std::vector<Transition> out;
    out.reserve(static_cast<std::size_t>(num_inputs_));
    for (std::uint64_t ext = 0; ext < num_inputs_; ++ext) {
        std::uint64_t from = 0, input_idx = 0;
        for (std::size_t i = 0; i < k_; ++i) {
            const std::uint64_t r_to = (state / row_base_[i]) % row_size_[i];
            const std::uint64_t e = (ext / input_pow_[i]) % q_;
            std::uint64_t u, r_from;
            if (nu_[i] == 0) {
                u = e;
                r_from = 0;
            } else {
                u = r_to % q_;
                r_from = r_to / q_ + e * (row_size_[i] / q_);
            }
            from += r_from * row_base_[i];
            input_idx += u * input_pow_[i];
        }
        Transition t = transition(from, input_idx);
        assert(t.to == state);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<int> Trellis::m_vector(std::uint64_t state) const {
    std::vector<int> m(k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        std::uint64_t r = (state / row_base_[i]) % row_size_[i];
        int last_nonzero = -1;
        for (int d = 0; d < nu_[i]; ++d) {
            if (r % q_ != 0) last_nonzero = d;
            r /= q_;
        }
        m[i] = nu_[i] - 1 - last_nonzero;  // = nu_i when the row is all zero
    }
    return m;
}

int Trellis::row_sigma(std::uint64_t row_reg, int nu) const {
    int last_nonzero = -1;
    for (int d = 0; d < nu; ++d) {
        if (row_reg % q_ != 0) last_nonzero = d;
        row_reg /= q_;
    }
    return last_nonzero + 1;
}

int Trellis::sigma(std::uint64_t state) const {
    int s = 0;
    for (std::size_t i = 0; i < k_; ++i)
        s = std::max(s, row_sigma((state / row_base_[i]) % row_size_[i], nu_[i]));
    return s;
}

std::uint64_t Trellis::reverse_state(std::uint64_t state) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < k_; ++i) {
        std::uint64_t r = (state / row_base_[i]) % row_size_[i];
        std::uint64_t rev = 0;
        for (int d = 0; d < nu_[i]; ++d) {
            rev = rev * q_ + r % q_;
            r /= q_;
        }
        out += rev * row_base_[i];
    }
    return out;
}

StateRegisters Trellis::unpack(std::uint64_t state) const {
    StateRegisters regs(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        std::uint64_t r = (state / row_base_[i]) % row_size_[i];
        regs[i].resize(static_cast<std::size_t>(nu_[i]));
        for (int d = 0; d < nu_[i]; ++d) {
            regs[i][static_cast<std::size_t>(d)] = static_cast<Elem>(r % q_);
            r /= q_;
        }
    }
    return regs;
}

std::uint64_t Trellis::pack(const StateRegisters& regs) const {
    assert(regs.size() == k_);
    std::uint64_t state = 0;
    for (std::size_t i = 0; i < k_; ++i) {
        assert(regs[i].size() == static_cast<std::size_t>(nu_[i]));
        std::uint64_t r = 0;
        for (int d = nu_[i] - 1; d >= 0; --d) r = r * q_ + regs[i][static_cast<std::size_t>(d)];
        state += r * row_base_[i];
    }
    return state;
}

std::uint64_t Trellis::input_index(const std::vector<Elem>& input) const {
    assert(input.size() == k_);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < k_; ++i) idx += static_cast<std::uint64_t>(input[i]) * input_pow_[i];
    return idx;
}

}  // namespace freedist
