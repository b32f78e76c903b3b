#include "algdiag/cartier.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "algdiag/errors.hpp"
#include "json_util.hpp"

namespace algdiag {

namespace {

unsigned field_q(const Field& f) {
  if (!f.is_finite()) throw Error(Errc::infinite_field, "Cartier operators need a finite field");
  return static_cast<unsigned>(f.cardinality());
}

void check_digit(unsigned r, unsigned q) {
  if (r >= q) {
    throw Error(Errc::digit_out_of_range,
                "digit " + std::to_string(r) + " outside 0.." + std::to_string(q - 1));
  }
}

}  // namespace

UniPoly cartier(const UniPoly& a, unsigned r) {
  const unsigned q = field_q(a.field());
  check_digit(r, q);
  std::vector<Element> out;
  const auto& c = a.coeffs();
  for (std::size_t i = r; i < c.size(); i += q) out.push_back(c[i]);
  return UniPoly(a.field(), std::move(out));
}

RatFun cartier(const RatFun& a, unsigned r) {
  const unsigned q = field_q(a.field());
  check_digit(r, q);
  if (a.is_polynomial()) return RatFun(cartier(a.num() * a.den().lead().inverse(), r));
  return RatFun(cartier(a.num() * a.den().pow(q - 1), r), a.den());
}

BiPoly cartier(const BiPoly& a, unsigned r, unsigned s) {
  const unsigned q = field_q(a.field());
  check_digit(r, q);
  check_digit(s, q);
  BiPoly out(a.field());
  for (const auto& [m, c] : a.terms()) {
    if (m.first % q == r && m.second % q == s) out.add_term(m.first / q, m.second / q, c);
  }
  return out;
}

KernelAutomaton2D rational_kernel(const BiPoly& p, const BiPoly& q, std::size_t budget) {
  if (&p.field() != &q.field()) throw Error(Errc::field_mismatch, "rational_kernel");
  const unsigned base = field_q(q.field());
  if (q.constant_term().is_zero()) {
    throw Error(Errc::zero_constant_term, "denominator " + q.to_string() + " vanishes at the origin");
  }
  KernelAutomaton2D aut{.q = base, .den = q};
  aut.degree_bound = std::max(p.total_degree(), 0L) + q.total_degree();
  const BiPoly qpow = q.pow(base - 1);

  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](BiPoly r) {
    auto [it, fresh] = index.emplace(r.key(), aut.states.size());
    if (fresh) {
      if (aut.states.size() >= budget) {
        throw Error(Errc::state_budget_exceeded,
                    "kernel closure exceeded " + std::to_string(budget) + " states");
      }
      aut.states.push_back(std::move(r));
    }
    return it->second;
  };
  intern(p);
  for (std::size_t i = 0; i < aut.states.size(); ++i) {
    const BiPoly prod = aut.states[i] * qpow;
    std::vector<std::size_t> row(static_cast<std::size_t>(base) * base);
    for (unsigned s = 0; s < base; ++s) {
      for (unsigned r = 0; r < base; ++r) row[r + base * s] = intern(cartier(prod, r, s));
    }
    aut.transitions.push_back(std::move(row));
  }
  return aut;
}

Element kernel_output(const BiPoly& state, const BiPoly& den) {
  return state.constant_term() * den.constant_term().inverse();
}

Element run_kernel(const KernelAutomaton2D& aut, std::uint64_t m, std::uint64_t n) {
  std::size_t s = aut.initial;
  while (m > 0 || n > 0) {
    s = aut.next(s, static_cast<unsigned>(m % aut.q), static_cast<unsigned>(n % aut.q));
    m /= aut.q;
    n /= aut.q;
  }
  return kernel_output(aut.states[s], aut.den);
}

Dfao diagonal_automaton(const KernelAutomaton2D& aut) {
  std::vector<std::size_t> index(aut.states.size(), aut.states.size());
  std::vector<std::size_t> order{aut.initial};
  index[aut.initial] = 0;
  std::deque<std::size_t> queue{aut.initial};
  std::vector<std::vector<std::size_t>> delta;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (unsigned r = 0; r < aut.q; ++r) {
      const std::size_t t = aut.next(s, r, r);
      if (index[t] == aut.states.size()) {
        index[t] = order.size();
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  std::vector<Element> out;
  std::vector<std::string> labels;
  for (std::size_t s : order) {
    std::vector<std::size_t> row;
    for (unsigned r = 0; r < aut.q; ++r) row.push_back(index[aut.next(s, r, r)]);
    delta.push_back(std::move(row));
    out.push_back(kernel_output(aut.states[s], aut.den));
    labels.push_back(aut.states[s].to_string());
  }
  return Dfao(aut.q, 0, std::move(delta), std::move(out), std::move(labels));
}

std::string kernel_to_json(const KernelAutomaton2D& aut) {
  nlohmann::ordered_json j;
  j["q"] = aut.q;
  j["digit_order"] = "lsd";
  j["dimension"] = 2;
  j["initial"] = aut.initial;
  j["transitions"] = aut.transitions;
  nlohmann::ordered_json outs = nlohmann::ordered_json::array();
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (const auto& s : aut.states) {
    outs.push_back(kernel_output(s, aut.den).to_string());
    labels.push_back(s.to_string());
  }
  j["outputs"] = std::move(outs);
  j["labels"] = std::move(labels);
  j["denominator"] = aut.den.to_string();
  j["degree_bound"] = aut.degree_bound;
  j["field"] = detail::field_to_json(aut.den.field());
  return j.dump(2) + "\n";
}

std::string kernel_to_dot(const KernelAutomaton2D& aut) {
  std::ostringstream os;
  os << "digraph kernel {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  start [shape=point];\n";
  os << "  start -> s" << aut.initial << ";\n";
  for (std::size_t i = 0; i < aut.states.size(); ++i) {
    os << "  s" << i << " [label=\"" << i << ":" << kernel_output(aut.states[i], aut.den).to_string()
       << "\", xlabel=\"" << aut.states[i].to_string() << "\"];\n";
  }
  for (std::size_t i = 0; i < aut.states.size(); ++i) {
    std::map<std::size_t, std::string> edges;
    for (unsigned s = 0; s < aut.q; ++s) {
      for (unsigned r = 0; r < aut.q; ++r) {
        std::string& label = edges[aut.next(i, r, s)];
        if (!label.empty()) label += ",";
        label += std::to_string(r) + "." + std::to_string(s);
      }
    }
    for (const auto& [t, label] : edges) {
      os << "  s" << i << " -> s" << t << " [label=\"" << label << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace algdiag
