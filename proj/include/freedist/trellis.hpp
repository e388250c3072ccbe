#ifndef FREEDIST_TRELLIS_HPP
#define FREEDIST_TRELLIS_HPP

#include <cstdint>
#include <vector>

#include "freedist/polymat.hpp"

namespace freedist {

/// Register contents of a trellis state: k rows, row i holding nu_i cells
/// most-recent-first (cell 0 is the input from one step ago, cell nu_i - 1
/// the oldest). Rows with nu_i = 0 are empty.
using StateRegisters = std::vector<std::vector<galois::Elem>>;

/// One edge of the state-transition diagram.
struct Transition {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::vector<galois::Elem> input;   // k symbols
    std::vector<galois::Elem> output;  // n symbols
    int weight = 0;                    // Hamming weight of output
};

/// Controller-canonical state-transition diagram of a row-reduced code.
///
/// States are canonical integers in [0, q^delta): base-q packing of the
/// register cells row by row, row 0 first, most recent cell in the lowest
/// digit. Immutable and shareable across threads after construction.
class Trellis {
   public:
    /// Throws NotRowReduced when G is not row reduced, ZeroRow on zero rows,
    /// StateSpaceTooLarge when q^k or the per-row output tables do not fit.
    explicit Trellis(const GeneratorMatrix& G);

    std::uint32_t q() const { return q_; }
    std::size_t k() const { return k_; }
    std::size_t n() const { return n_; }
    int memory() const { return M_; }
    int delta() const { return delta_; }
    const std::vector<int>& nu() const { return nu_; }

    /// q^delta.
    std::uint64_t num_states() const;
    /// q^k, the branching factor of both directions.
    std::uint64_t num_inputs() const { return num_inputs_; }

    struct Step {
        std::uint64_t state;
        int weight;
    };

    /// Successor and output weight for one input vector. input_index is the
    /// lexicographic rank of the input vector (row 0 most significant).
    Step forward_step(std::uint64_t from, std::uint64_t input_index) const;

    /// Predecessor and the weight of the edge predecessor -> to for one
    /// backward extension. Extension symbol i becomes the new oldest cell of
    /// row i; for rows with nu_i = 0 it is the edge input instead. There are
    /// exactly q^k backward extensions, the all-zero one being ext_index 0.
    Step backward_step(std::uint64_t to, std::uint64_t ext_index) const;

    /// Full edge data, computed directly from the generator coefficients
    /// (independent of the packed output tables used by the step functions).
    Transition transition(std::uint64_t from, std::uint64_t input_index) const;

    /// All q^k forward transitions in lexicographic input order.
    std::vector<Transition> forward_extensions(std::uint64_t state) const;

    /// All q^k transitions ending in `state`, in extension-symbol order.
    std::vector<Transition> backward_extensions(std::uint64_t state) const;

    /// m_i = number of zero cells after the rightmost nonzero cell of row i
    /// (most-recent-first); nu_i for an all-zero row, 0 when nu_i = 0.
    std::vector<int> m_vector(std::uint64_t state) const;

    /// max_i(nu_i - m_i): the minimum number of backward steps needed to
    /// reach the zero state, equivalently the minimum length of a forward
    /// path from the zero state to this state.
    int sigma(std::uint64_t state) const;

    /// State with every row's register reversed; maps a state of this code
    /// onto the corresponding state of the reverse code's trellis.
    std::uint64_t reverse_state(std::uint64_t state) const;

    StateRegisters unpack(std::uint64_t state) const;
    std::uint64_t pack(const StateRegisters& regs) const;

    /// Lexicographic rank of an input vector (row 0 most significant).
    std::uint64_t input_index(const std::vector<galois::Elem>& input) const;

   private:
    int row_sigma(std::uint64_t row_reg, int nu) const;

    std::shared_ptr<const galois::Field> field_;
    std::size_t k_ = 0, n_ = 0;
    std::uint32_t q_ = 0;
    std::vector<int> nu_;
    int M_ = 0;
    int delta_ = 0;
    std::uint64_t num_inputs_ = 1;
    std::uint64_t num_states_ = 1;

    std::vector<std::uint64_t> row_size_;    // q^{nu_i}
    std::vector<std::uint64_t> row_base_;    // q^{offset_i}, offset_i = sum of nu_j, j < i
    std::vector<std::uint64_t> input_pow_;   // q^{k-1-i}
    std::vector<std::vector<galois::Elem>> coeff_;  // coeff_[i][j*(nu_i+1)+d] = z^d coefficient of g_ij

    // Per-row output contributions: contrib_[i][(reg*q + u)*n + j] is the
    // F_q contribution of row i to output j when the row register holds
    // `reg` and the row input is `u`.
    std::vector<std::vector<galois::Elem>> contrib_;
};

}  // namespace freedist

#endif
