#include "argrank/entailment.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "argrank/errors.hpp"

namespace argrank {

PremiseSet::PremiseSet(std::initializer_list<Formula> items) {
  for (const Formula& f : items) insert(f);
}

bool PremiseSet::insert(const Formula& f) {
  if (contains(f)) return false;
  items_.push_back(f);
  return true;
}

bool PremiseSet::contains(const Formula& f) const {
  return std::find(items_.begin(), items_.end(), f) != items_.end();
}

PremiseSet PremiseSet::with(const Formula& extra) const {
  PremiseSet out = *this;
  out.insert(extra);
  return out;
}

PremiseSet PremiseSet::union_with(const PremiseSet& other) const {
  PremiseSet out = *this;
  for (const Formula& f : other) out.insert(f);
  return out;
}

std::vector<std::string> PremiseSet::sorted_texts() const {
  std::vector<std::string> out;
  out.reserve(items_.size());
  for (const Formula& f : items_) out.push_back(f.text());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Truth value of atom i across the 64 valuations of one word, for i < 6.
constexpr std::uint64_t low_atom_mask[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

std::uint64_t eval_block(const Formula& f,
                         const std::map<std::string, std::size_t>& atom_index,
                         std::uint64_t block) {
  switch (f.kind()) {
    case Connective::Atom: {
      std::size_t i = atom_index.at(f.atom_name());
      if (i < 6) return low_atom_mask[i];
      return ((block >> (i - 6)) & 1u) ? ~0ull : 0ull;
    }
    case Connective::Neg:
      return ~eval_block(f.child(0), atom_index, block);
    case Connective::And:
      return eval_block(f.child(0), atom_index, block) &
             eval_block(f.child(1), atom_index, block);
    case Connective::Or:
      return eval_block(f.child(0), atom_index, block) |
             eval_block(f.child(1), atom_index, block);
    case Connective::Imp:
      return ~eval_block(f.child(0), atom_index, block) |
             eval_block(f.child(1), atom_index, block);
    case Connective::Iff:
      return ~(eval_block(f.child(0), atom_index, block) ^
               eval_block(f.child(1), atom_index, block));
    case Connective::Falsity:
      return 0ull;
    case Connective::Truth:
      return ~0ull;
  }
  return 0ull;
}

bool entails_uncached(const PremiseSet& premises, const Formula& conclusion) {
  std::set<std::string> names = atoms(conclusion);
  for (const Formula& p : premises) names.merge(atoms(p));
  if (names.size() > max_entailment_atoms) {
    throw AtomLimitExceeded(names.size(), max_entailment_atoms);
  }

  std::map<std::string, std::size_t> atom_index;
  std::size_t next = 0;
  for (const std::string& n : names) atom_index[n] = next++;

  const std::size_t n = atom_index.size();
  const std::uint64_t valuations = 1ull << n;
  const std::uint64_t blocks = n <= 6 ? 1 : (valuations >> 6);
  const std::uint64_t last_mask =
      valuations >= 64 ? ~0ull : ((1ull << valuations) - 1);

  for (std::uint64_t b = 0; b < blocks; ++b) {
    std::uint64_t holds = last_mask;
    for (const Formula& p : premises) {
      holds &= eval_block(p, atom_index, b);
      if (holds == 0) break;
    }
    if ((holds & ~eval_block(conclusion, atom_index, b)) != 0) return false;
  }
  return true;
}

std::string memo_key(const PremiseSet& premises, const Formula& conclusion) {
  std::string key;
  for (const std::string& t : premises.sorted_texts()) {
    key += t;
    key += '\x1e';
  }
  key += '\x1f';
  key += conclusion.text();
  return key;
}

}  // namespace

bool entails(const PremiseSet& premises, const Formula& conclusion) {
  static std::mutex mu;
  static std::unordered_map<std::string, bool> memo;

  std::string key = memo_key(premises, conclusion);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  bool result = entails_uncached(premises, conclusion);
  {
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::move(key), result);
  }
  return result;
}

bool is_consistent(const PremiseSet& premises) {
  return !entails(premises, Formula::falsity());
}

bool equiv_under(const PremiseSet& premises, const Formula& lhs, const Formula& rhs) {
  return entails(premises.with(lhs), rhs) && entails(premises.with(rhs), lhs);
}

}  // namespace argrank
