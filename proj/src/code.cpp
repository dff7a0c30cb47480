#include "palab/code.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace palab {

namespace {

constexpr std::uint64_t kProbeBits = 4096;  // "huge" = value needs more than this

const CodeExpr::Symbol* as_symbol(const CodePtr& x) {
  return std::get_if<CodeExpr::Symbol>(&x->node);
}

// Numeral nodes behave exactly like a one-splice sequence; normalize here.
std::vector<CodeExpr::Part> parts_of(const CodePtr& x) {
  if (const auto* seq = std::get_if<CodeExpr::Sequence>(&x->node)) return seq->parts;
  if (const auto* num = std::get_if<CodeExpr::Numeral>(&x->node))
    return {CodeExpr::Part(CodeExpr::Splice{num->n, num->syms})};
  throw CodeError("expected a sequence-valued code");
}

// The numeral n-bar is spelled: n opening parens, "0", then n ")'" pairs.
// Symbol at offset j of that 3n+1 run, given n's concrete value.
std::uint64_t numeral_symbol_at(const BigNat& n, const NumeralSyms& s, const BigNat& j) {
  if (j < n) return s.lparen;
  if (j == n) return s.zero;
  BigNat k = j - n - 1;
  return (k % 2 == 0) ? s.rparen : s.succ;
}

struct Cursor {
  std::vector<CodeExpr::Part> parts;
  std::size_t idx = 0;
  BigNat off = 0;  // offset inside the current splice part

  bool at_end() const { return idx == parts.size(); }
  const CodePtr* elem() const {
    return at_end() ? nullptr : std::get_if<CodePtr>(&parts[idx]);
  }
  const CodeExpr::Splice* splice() const {
    return at_end() ? nullptr : std::get_if<CodeExpr::Splice>(&parts[idx]);
  }
  void next_part() {
    ++idx;
    off = 0;
  }
  // Step one symbol into the current splice; leaves the splice when its
  // concrete end is reached (a huge splice is never stepped to its end).
  void step_splice(const std::optional<BigNat>& n_value) {
    off += 1;
    if (n_value && off == 3 * (*n_value) + 1) next_part();
  }
};

std::optional<BigNat> splice_value(const CodeExpr::Splice& s) {
  return probe_value(s.n, kProbeBits);
}

std::uint64_t splice_symbol(const CodeExpr::Splice& s, const std::optional<BigNat>& n_value,
                            const BigNat& off) {
  if (n_value) return numeral_symbol_at(*n_value, s.syms, off);
  // Value needs > kProbeBits bits, so any offset we can step to is inside the
  // opening-paren run.
  if (bit_length(off) >= kProbeBits) throw CodeCompareError("offset too deep in lazy numeral");
  return s.syms.lparen;
}

bool stream_equal(const CodePtr& a, const CodePtr& b);

bool elem_equal(const CodePtr& a, const CodePtr& b) { return code_equal(a, b); }

bool distinct_numeral_syms(const NumeralSyms& s) {
  return s.lparen != s.zero && s.lparen != s.rparen && s.lparen != s.succ &&
         s.zero != s.rparen && s.zero != s.succ && s.rparen != s.succ;
}

// Decide two runs' shared stretch in closed form: each run, read from its
// current offset, is a (possibly empty) block of opening parens, its zero
// mark, then an alternating ) ' tail. Over one symbol set of distinct codes
// the first disagreement, if any, sits at a block boundary, so the decision
// needs no stepping even when the runs hold astronomically many symbols.
// Requires at least one side's value to be readable. Returns false on a
// mismatch inside the shared stretch; otherwise moves both cursors past it
// (the shorter run leaves its part) and returns true.
bool match_runs(Cursor& ca, const std::optional<BigNat>& va, Cursor& cb,
                const std::optional<BigNat>& vb) {
  struct View {
    std::optional<BigNat> zero_at;  // steps until the zero mark, if reachable
    bool tail = false;              // already inside the closing ) ' tail
    int parity = 0;                 // tail phase: 0 means ")" comes next
    std::optional<BigNat> len;      // remaining length, when the value is readable
  };
  auto view = [](const std::optional<BigNat>& v, const BigNat& off) {
    View w;
    if (!v) return w;  // huge run: opening parens past every reachable step
    if (off <= *v) {
      w.zero_at = *v - off;
    } else {
      w.tail = true;
      w.parity = ((off - *v - 1) % 2 != 0) ? 1 : 0;
    }
    w.len = 3 * (*v) + 1 - off;
    return w;
  };
  View a = view(va, ca.off), b = view(vb, cb.off);
  if (a.zero_at && b.zero_at) {
    if (*a.zero_at != *b.zero_at) return false;  // zero meets an opening paren
  } else if (a.tail && b.tail) {
    if (a.parity != b.parity) return false;  // ")" meets "'"
  } else {
    // Opening parens or a zero mark against a tail (or against a huge run's
    // paren block): the very first symbols already differ.
    return false;
  }
  // Identical through the shorter run's end; jump both cursors there.
  const BigNat m = std::min(*a.len, *b.len);
  if (*a.len == m) ca.next_part(); else ca.off += m;
  if (*b.len == m) cb.next_part(); else cb.off += m;
  return true;
}

// Symbol-by-symbol comparison is reserved for degenerate custom symbol sets;
// cap it so adversarial inputs fail loudly instead of running for ages.
constexpr std::uint64_t kCompareStepBudget = 1 << 22;

bool stream_equal_parts(Cursor ca, Cursor cb) {
  std::uint64_t budget = kCompareStepBudget;
  for (;;) {
    if (ca.at_end() && cb.at_end()) return true;
    if (ca.at_end() || cb.at_end()) return false;

    const CodePtr* ea = ca.elem();
    const CodePtr* eb = cb.elem();
    if (ea && eb) {
      if (!elem_equal(*ea, *eb)) return false;
      ca.next_part();
      cb.next_part();
      continue;
    }

    const CodeExpr::Splice* sa = ca.splice();
    const CodeExpr::Splice* sb = cb.splice();
    if (sa && sb) {
      const auto va = splice_value(*sa);
      const auto vb = splice_value(*sb);
      if (ca.off == cb.off && symnat_equal(sa->n, sb->n) && sa->syms == sb->syms) {
        // Identical remainders; skip both splices wholly.
        ca.next_part();
        cb.next_part();
        continue;
      }
      if (!va && !vb) {
        if (ca.off == cb.off) {
          // Both runs are huge and not identical: they diverge inside the
          // opening-paren zone or at the first of the two zero marks, both
          // far beyond any offset reachable by stepping. Provably unequal.
          return false;
        }
        throw CodeCompareError("lazy numeral runs met at different offsets");
      }
      if (sa->syms == sb->syms && distinct_numeral_syms(sa->syms)) {
        if (ca.off == cb.off && va && vb && *va == *vb) {
          ca.next_part();
          cb.next_part();
          continue;
        }
        if (!match_runs(ca, va, cb, vb)) return false;
        continue;
      }
      // Degenerate or mixed symbol sets: step through the overlap of these
      // two parts one symbol at a time.
      const std::size_t ia = ca.idx, ib = cb.idx;
      while (ca.idx == ia && cb.idx == ib) {
        if (budget == 0)
          throw CodeCompareError("numeral run comparison exceeded its streaming budget");
        --budget;
        if (splice_symbol(*sa, va, ca.off) != splice_symbol(*sb, vb, cb.off)) return false;
        ca.step_splice(va);
        cb.step_splice(vb);
      }
      continue;
    }

    // One cursor at a single element, the other inside a splice. Splice
    // symbols are odd; a sequence-valued element is even, so only a Symbol
    // element can match.
    Cursor& ce = ea ? ca : cb;
    Cursor& cs = ea ? cb : ca;
    const CodePtr* e = ea ? ea : eb;
    const CodeExpr::Splice* s = ea ? sb : sa;
    const auto* sym = as_symbol(*e);
    if (!sym) return false;
    const auto sv = splice_value(*s);
    if (splice_symbol(*s, sv, cs.off) != sym->code) return false;
    ce.next_part();
    cs.step_splice(sv);
  }
}

bool stream_equal(const CodePtr& a, const CodePtr& b) {
  Cursor ca{parts_of(a)};
  Cursor cb{parts_of(b)};
  return stream_equal_parts(std::move(ca), std::move(cb));
}

// Iterate the exponent list of a sequence-valued code. Calls fn(index, exp)
// for each element; returns false (overflow) if any exponent's value exceeds
// exp_cap or the element count exceeds count_cap.
template <typename Fn>
bool for_each_exponent(const CodePtr& x, const BigNat& exp_cap, std::uint64_t count_cap,
                       std::uint64_t& count, Fn&& fn) {
  const auto parts = parts_of(x);
  for (const auto& part : parts) {
    if (const auto* elem = std::get_if<CodePtr>(&part)) {
      BigNat e;
      if (const auto* sym = as_symbol(*elem)) {
        e = sym->code;
      } else {
        auto sub = materialize(*elem, bit_length(exp_cap) + 1);
        if (sub.overflow() || *sub.value > exp_cap) return false;
        e = *sub.value;
      }
      if (e > exp_cap) return false;
      if (++count > count_cap) return false;
      fn(count - 1, e);
    } else {
      const auto& spl = std::get<CodeExpr::Splice>(part);
      auto n = probe_value(spl.n, bit_length(BigNat(count_cap)) + 1);
      if (!n) return false;
      BigNat len = 3 * (*n) + 1;
      if (BigNat(count) + len > count_cap) return false;
      for (BigNat j = 0; j < len; ++j) {
        fn(count, BigNat(numeral_symbol_at(*n, spl.syms, j)));
        ++count;
      }
    }
  }
  return true;
}

}  // namespace

CodePtr make_symbol(std::uint64_t code) {
  if (code % 2 == 0) throw CodeError("symbol codes must be odd");
  return std::make_shared<CodeExpr>(CodeExpr{CodeExpr::Symbol{code}});
}

CodePtr make_sequence(std::vector<CodeExpr::Part> parts) {
  if (parts.empty()) throw CodeError("sequence codes are nonempty");
  return std::make_shared<CodeExpr>(CodeExpr{CodeExpr::Sequence{std::move(parts)}});
}

CodePtr make_numeral(SymNat n, NumeralSyms syms) {
  return std::make_shared<CodeExpr>(CodeExpr{CodeExpr::Numeral{std::move(n), syms}});
}

CodeExpr::Part splice_part(SymNat n, NumeralSyms syms) {
  return CodeExpr::Part(CodeExpr::Splice{std::move(n), syms});
}

bool is_symbol(const CodePtr& x) { return as_symbol(x) != nullptr; }

bool is_sequence_valued(const CodePtr& x) { return !is_symbol(x); }

Materialized materialize(const CodePtr& x, std::uint64_t bit_limit) {
  if (const auto* sym = as_symbol(x)) {
    BigNat v = sym->code;
    if (bit_length(v) > bit_limit) return {std::nullopt, std::log2(double(sym->code))};
    return {v, std::log2(double(sym->code))};
  }
  // Exponent values are bounded by the bit budget: an exponent e at prime p
  // contributes e*log2(p) >= e bits.
  BigNat exp_cap = BigNat(bit_limit) + 64;
  std::uint64_t count_cap = bit_limit + 64;
  double est = 0.0;
  std::uint64_t count = 0;
  bool small = for_each_exponent(x, exp_cap, count_cap, count, [&](std::uint64_t i, const BigNat& e) {
    est += e.convert_to<double>() * std::log2(double(primes().nth(i)));
  });
  if (!small || est > double(bit_limit) + 64.0)
    return {std::nullopt, small ? est : approx_bits(x)};
  BigNat prod = 1;
  std::uint64_t idx = 0;
  for_each_exponent(x, exp_cap, count_cap, idx, [&](std::uint64_t i, const BigNat& e) {
    prod *= big_pow(primes().nth(i), e.convert_to<std::uint64_t>());
  });
  double bits = double(bit_length(prod));
  if (bit_length(prod) > bit_limit) return {std::nullopt, bits};
  return {prod, bits};
}

double approx_bits(const CodePtr& x) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (const auto* sym = as_symbol(x)) return std::log2(double(sym->code));
  double est = 0.0;
  std::size_t idx = 0;
  for (const auto& part : parts_of(x)) {
    if (const auto* elem = std::get_if<CodePtr>(&part)) {
      double e;
      if (const auto* sym = as_symbol(*elem)) {
        e = double(sym->code);
      } else {
        auto probe = materialize(*elem, 64);
        e = probe.overflow() ? std::exp2(std::min(probe.approx_bits, 1024.0))
                              : probe.value->convert_to<double>();
      }
      est += e * std::log2(double(primes().nth(idx++)));
      if (!std::isfinite(est)) return kInf;
    } else {
      const auto& spl = std::get<CodeExpr::Splice>(part);
      auto n = probe_value(spl.n, 64);
      if (!n || *n > 1000000) return kInf;
      BigNat len = 3 * (*n) + 1;
      for (BigNat j = 0; j < len; ++j) {
        est += double(numeral_symbol_at(*n, spl.syms, j)) * std::log2(double(primes().nth(idx++)));
      }
    }
  }
  return est;
}

bool code_equal(const CodePtr& a, const CodePtr& b) {
  const auto* sa = as_symbol(a);
  const auto* sb = as_symbol(b);
  if (sa && sb) return sa->code == sb->code;
  if (sa || sb) return false;  // odd symbol value vs even sequence value
  return stream_equal(a, b);
}

bool symnat_equal(const SymNat& a, const SymNat& b) {
  if (a.concrete() && b.concrete()) return a.value() == b.value();
  if (!a.concrete() && !b.concrete()) return code_equal(a.code(), b.code());
  const SymNat& conc = a.concrete() ? a : b;
  const SymNat& code = a.concrete() ? b : a;
  auto v = materialize(code.code(), bit_length(conc.value()) + 64);
  return v.value && *v.value == conc.value();
}

std::optional<BigNat> probe_value(const SymNat& n, std::uint64_t bit_limit) {
  if (n.concrete()) {
    if (bit_length(n.value()) > bit_limit) return std::nullopt;
    return n.value();
  }
  auto m = materialize(n.code(), bit_limit);
  return m.value;
}

BigNat lh(const CodePtr& x) {
  if (is_symbol(x)) throw CodeError("lh: not a sequence code");
  BigNat total = 0;
  for (const auto& part : parts_of(x)) {
    if (std::holds_alternative<CodePtr>(part)) {
      total += 1;
    } else {
      const auto& spl = std::get<CodeExpr::Splice>(part);
      auto n = probe_value(spl.n, kProbeBits);
      if (!n) throw CodeError("lh: length not concretely representable");
      total += 3 * (*n) + 1;
    }
  }
  return total;
}

CodePtr component(const CodePtr& x, const BigNat& i) {
  if (is_symbol(x)) throw CodeError("component: not a sequence code");
  BigNat pos = i;
  for (const auto& part : parts_of(x)) {
    if (const auto* elem = std::get_if<CodePtr>(&part)) {
      if (pos == 0) return *elem;
      pos -= 1;
      continue;
    }
    const auto& spl = std::get<CodeExpr::Splice>(part);
    auto n = probe_value(spl.n, kProbeBits);
    if (n) {
      BigNat len = 3 * (*n) + 1;
      if (pos < len) return make_symbol(numeral_symbol_at(*n, spl.syms, pos));
      pos -= len;
      continue;
    }
    // Huge run: any index with fewer than kProbeBits-ish bits lands in the
    // opening-paren zone.
    if (bit_length(pos) + 8 < kProbeBits) return make_symbol(spl.syms.lparen);
    throw CodeError("component: index not resolvable inside lazy numeral");
  }
  throw CodeError("component: index out of range");
}

CodePtr concat(const std::vector<CodePtr>& xs) {
  if (xs.empty()) throw CodeError("concat: needs at least one operand");
  std::vector<CodeExpr::Part> parts;
  for (const auto& x : xs) {
    if (is_symbol(x)) {
      parts.emplace_back(x);  // a bare symbol acts as the length-1 sequence 2^c
    } else if (const auto* seq = std::get_if<CodeExpr::Sequence>(&x->node)) {
      for (const auto& p : seq->parts) parts.push_back(p);
    } else {
      const auto& num = std::get<CodeExpr::Numeral>(x->node);
      parts.emplace_back(CodeExpr::Splice{num.n, num.syms});
    }
  }
  return make_sequence(std::move(parts));
}

SymNat monus(const SymNat& a, const SymNat& b) {
  if (!a.concrete() || !b.concrete()) throw CodeError("monus: code-valued operands rejected");
  return SymNat::of(a.value() > b.value() ? BigNat(a.value() - b.value()) : BigNat(0));
}

std::string factored(const CodePtr& x, std::size_t max_terms) {
  if (const auto* sym = as_symbol(x)) return std::to_string(sym->code);
  std::ostringstream out;
  std::size_t idx = 0;
  bool truncated = false;
  for (const auto& part : parts_of(x)) {
    if (idx >= max_terms) {
      truncated = true;
      break;
    }
    if (idx > 0) out << " * ";
    if (const auto* elem = std::get_if<CodePtr>(&part)) {
      out << primes().nth(idx) << "^";
      if (const auto* sym = as_symbol(*elem)) {
        out << sym->code;
      } else {
        out << "(" << factored(*elem, max_terms) << ")";
      }
      ++idx;
      continue;
    }
    const auto& spl = std::get<CodeExpr::Splice>(part);
    auto n = probe_value(spl.n, 64);
    if (n && 3 * (*n) + 1 + BigNat(idx) <= BigNat(max_terms)) {
      BigNat len = 3 * (*n) + 1;
      for (BigNat j = 0; j < len; ++j) {
        if (j > 0) out << " * ";
        out << primes().nth(idx) << "^" << numeral_symbol_at(*n, spl.syms, j);
        ++idx;
      }
      continue;
    }
    double nb = n ? std::log2(std::max(1.0, n->convert_to<double>())) : approx_bits(spl.n.code());
    out << "[numeral run: 3n+1 symbols, n ~ 2^" << std::llround(nb) << "]";
    truncated = true;
    break;
  }
  if (truncated) out << " * ...";
  return out.str();
}

}  // namespace palab
