// Copyright 2026 The KECS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kecs/errors.hpp"

namespace kecs {

struct Literal {
  int var = 0;  // 0-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  Literal first;
  Literal second;

  friend bool operator==(const Clause&, const Clause&) = default;
};

// Bit i is the value of variable i (x_{i+1}).
using TruthAssignment = std::vector<bool>;

inline std::uint64_t AssignmentValue(const TruthAssignment& a) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < a.size() && i < 64; ++i) {
    if (a[i]) v |= std::uint64_t{1} << i;
  }
  return v;
}

inline TruthAssignment AssignmentFromMask(int n, std::uint64_t mask) {
  TruthAssignment a(n);
  for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1U;
  return a;
}

class TwoCnf {
 public:
  enum class Occurrence { kAny, kAtLeastTwo };

  TwoCnf() = default;
  TwoCnf(int num_vars, std::vector<Clause> clauses, Occurrence rule = Occurrence::kAny)
      : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars < 0) throw InputError("negative variable count");
    for (const Clause& c : clauses_) {
      for (const Literal& l : {c.first, c.second}) {
        if (l.var < 0 || l.var >= num_vars) {
          throw InputError("literal references variable " + std::to_string(l.var + 1) +
                           " outside 1.." + std::to_string(num_vars));
        }
      }
    }
    if (rule == Occurrence::kAtLeastTwo) RequireTwoOccurrences();
  }

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(int j) const { return clauses_[j]; }

  // Number of clauses that mention variable v (a clause naming v twice counts once).
  std::vector<int> OccurrenceCounts() const {
    std::vector<int> counts(num_vars_, 0);
    for (const Clause& c : clauses_) {
      ++counts[c.first.var];
      if (c.second.var != c.first.var) ++counts[c.second.var];
    }
    return counts;
  }

  void RequireTwoOccurrences() const {
    auto counts = OccurrenceCounts();
    for (int v = 0; v < num_vars_; ++v) {
      if (counts[v] < 2) {
        throw InputError("variable x" + std::to_string(v + 1) + " occurs in " +
                         std::to_string(counts[v]) + " clause(s); at least 2 required");
      }
    }
  }

  friend bool operator==(const TwoCnf&, const TwoCnf&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

inline bool LiteralValue(const Literal& l, const TruthAssignment& a) {
  return a[l.var] != l.negated;
}

inline bool ClauseSatisfied(const Clause& c, const TruthAssignment& a) {
  return LiteralValue(c.first, a) || LiteralValue(c.second, a);
}

inline int CountSatisfied(const TwoCnf& cnf, const TruthAssignment& a) {
  if (static_cast<int>(a.size()) != cnf.num_vars()) {
    throw InputError("assignment has " + std::to_string(a.size()) + " values for " +
                     std::to_string(cnf.num_vars()) + " variables");
  }
  int count = 0;
  for (const Clause& c : cnf.clauses()) count += ClauseSatisfied(c, a) ? 1 : 0;
  return count;
}

// Every literal replaced by its complement.
inline TwoCnf ComplementLiterals(const TwoCnf& cnf) {
  std::vector<Clause> out = cnf.clauses();
  for (Clause& c : out) {
    c.first.negated = !c.first.negated;
    c.second.negated = !c.second.negated;
  }
  return TwoCnf(cnf.num_vars(), std::move(out));
}

// ---------------------------------------------------------------------------
// DIMACS

inline TwoCnf ParseDimacs2Cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<Clause> clauses;
  auto fail = [&](const std::string& msg) {
    return FormatError("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (n >= 0) throw fail("duplicate header");
      if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0) {
        throw fail("expected 'p cnf <vars> <clauses>'");
      }
      continue;
    }
    if (n < 0) throw fail("clause before 'p cnf' header");
    std::vector<long long> lits;
    std::istringstream cs(line);
    std::string tok;
    bool terminated = false;
    while (cs >> tok) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) throw fail("bad literal '" + tok + "'");
      if (value == 0) {
        terminated = true;
        break;
      }
      lits.push_back(value);
    }
    if (!terminated) throw fail("clause not terminated by 0");
    if (lits.size() != 2) {
      throw fail("clause has " + std::to_string(lits.size()) + " literal(s); exactly 2 required");
    }
    Clause c;
    Literal* slots[2] = {&c.first, &c.second};
    for (int i = 0; i < 2; ++i) {
      long long var = lits[i] < 0 ? -lits[i] : lits[i];
      if (var > n) {
        throw fail("variable " + std::to_string(var) + " outside 1.." + std::to_string(n));
      }
      *slots[i] = Literal{static_cast<int>(var - 1), lits[i] < 0};
    }
    clauses.push_back(c);
  }
  if (n < 0) throw FormatError("missing 'p cnf' header");
  if (static_cast<int>(clauses.size()) != m) {
    throw FormatError("header declares " + std::to_string(m) + " clauses, found " +
                      std::to_string(clauses.size()));
  }
  return TwoCnf(n, std::move(clauses));
}

inline std::string WriteDimacs(const TwoCnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars() << ' ' << cnf.num_clauses() << '\n';
  auto lit = [](const Literal& l) { return (l.negated ? -1 : 1) * (l.var + 1); };
  for (const Clause& c : cnf.clauses()) out << lit(c.first) << ' ' << lit(c.second) << " 0\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Exhaustive extrema

struct SatExtrema {
  int k_max = 0;
  TruthAssignment argmax;
  int k_min = 0;
  TruthAssignment argmin;
};

inline constexpr int kDefaultSatVariableBudget = 24;

// Enumerates all 2^n assignments in increasing bit-vector order; the first
// assignment reaching an extremum is its witness.
inline SatExtrema SolveSatExtrema(const TwoCnf& cnf, int variable_budget = kDefaultSatVariableBudget) {
  const int n = cnf.num_vars();
  if (n > variable_budget || n > 62) {
    throw Error(ErrorKind::kBudget, "sat_extrema: " + std::to_string(n) +
                                        " variables exceed budget " + std::to_string(variable_budget));
  }
  SatExtrema best;
  best.k_max = -1;
  best.k_min = cnf.num_clauses() + 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    TruthAssignment a = AssignmentFromMask(n, mask);
    int sat = CountSatisfied(cnf, a);
    if (sat > best.k_max) {
      best.k_max = sat;
      best.argmax = a;
    }
    if (sat < best.k_min) {
      best.k_min = sat;
      best.argmin = std::move(a);
    }
  }
  return best;
}

}  // namespace kecs
