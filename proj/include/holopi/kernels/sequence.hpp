#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "holopi/holonomic/recurrence.hpp"
#include "holopi/kernels/binomial_kernel.hpp"

namespace holopi {

/// A named integer-like sequence given by a closed binomial sum over k, a
/// P-recurrence, or both. Recurrence terms are memoized behind a mutex so one
/// instance can be shared between threads.
class SequenceDef {
 public:
  SequenceDef() = default;
  SequenceDef(std::string id, std::optional<BinomialKernel> closed, std::optional<PRecurrence> rec,
              std::vector<BigRational> known = {})
      : id_(std::move(id)), closed_(std::move(closed)), rec_(std::move(rec)), known_(std::move(known)) {
    if (!closed_ && !rec_) fail(ErrorKind::CatalogError, "sequence '" + id_ + "' has neither closed form nor recurrence");
  }

  const std::string& id() const { return id_; }
  bool has_closed_form() const { return closed_.has_value(); }
  bool has_recurrence() const { return rec_.has_value(); }
  const std::optional<BinomialKernel>& closed_form() const { return closed_; }
  const std::optional<PRecurrence>& recurrence() const { return rec_; }
  const std::vector<BigRational>& known_terms() const { return known_; }

  BigRational closed(long n) const {
    if (!closed_) fail(ErrorKind::NoClosedForm, "sequence '" + id_ + "' has no closed form");
    return closed_->inner_sum(n);
  }

  BigRational by_recurrence(long n) const {
    if (!rec_) fail(ErrorKind::NoRecurrence, "sequence '" + id_ + "' has no recurrence");
    std::lock_guard<std::mutex> lock(memo_->mutex);
    rec_->extend(memo_->terms, n);
    return memo_->terms[static_cast<size_t>(n)];
  }

  /// Preferred evaluation: recurrence when present (memoized), else the closed sum.
  BigRational operator()(long n) const { return rec_ ? by_recurrence(n) : closed(n); }

  std::vector<BigRational> terms(long upTo) const {
    std::vector<BigRational> t;
    t.reserve(static_cast<size_t>(upTo) + 1);
    if (rec_) {
      std::lock_guard<std::mutex> lock(memo_->mutex);
      rec_->extend(memo_->terms, upTo);
      t.assign(memo_->terms.begin(), memo_->terms.begin() + upTo + 1);
      return t;
    }
    for (long n = 0; n <= upTo; ++n) t.push_back(closed(n));
    return t;
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::vector<BigRational> terms;
  };
  std::string id_;
  std::optional<BinomialKernel> closed_;
  std::optional<PRecurrence> rec_;
  std::vector<BigRational> known_;
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

inline BigRational seq_eval_closed(const SequenceDef& s, long n) { return s.closed(n); }
inline BigRational seq_eval_recurrence(const SequenceDef& s, long n) { return s.by_recurrence(n); }

struct AgreeResult {
  bool agree = true;
  std::optional<long> firstMismatch;
};

/// Compares two sequences term by term on 0..upTo, each through its preferred evaluation.
inline AgreeResult seqs_agree(const SequenceDef& a, const SequenceDef& b, long upTo) {
  auto ta = a.terms(upTo), tb = b.terms(upTo);
  for (long n = 0; n <= upTo; ++n)
    if (ta[n] != tb[n]) return {false, n};
  return {};
}

/// Closed form against recurrence for a single sequence carrying both.
inline AgreeResult closed_matches_recurrence(const SequenceDef& s, long upTo) {
  auto rec = s.terms(upTo);
  for (long n = 0; n <= upTo; ++n)
    if (s.closed(n) != rec[n]) return {false, n};
  return {};
}

}  // namespace holopi
