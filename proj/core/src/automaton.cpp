#include "algdiag/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "algdiag/errors.hpp"
#include "json_util.hpp"

namespace algdiag {

using ordered_json = nlohmann::ordered_json;

Dfao::Dfao(unsigned q, std::size_t initial, std::vector<std::vector<std::size_t>> transitions,
           std::vector<Element> outputs, std::vector<std::string> labels)
    : q_(q),
      initial_(initial),
      delta_(std::move(transitions)),
      out_(std::move(outputs)),
      labels_(std::move(labels)) {
  if (q_ < 2) throw SchemaError("$.q", "digit base must be at least 2");
  if (delta_.empty()) throw SchemaError("$.transitions", "automaton needs at least one state");
  if (initial_ >= delta_.size()) throw SchemaError("$.initial", "initial state out of range");
  for (std::size_t s = 0; s < delta_.size(); ++s) {
    const std::string path = "$.transitions[" + std::to_string(s) + "]";
    if (delta_[s].size() != q_) throw SchemaError(path, "expected " + std::to_string(q_) + " targets");
    for (std::size_t r = 0; r < q_; ++r) {
      if (delta_[s][r] >= delta_.size()) {
        throw SchemaError(path + "[" + std::to_string(r) + "]", "target state out of range");
      }
    }
  }
  if (out_.size() != delta_.size()) throw SchemaError("$.outputs", "expected one output per state");
  for (std::size_t s = 0; s < out_.size(); ++s) {
    if (!out_[s].has_field() || &out_[s].field() != &out_[0].field()) {
      throw SchemaError("$.outputs[" + std::to_string(s) + "]", "outputs must share one field");
    }
  }
  if (!labels_.empty() && labels_.size() != delta_.size()) {
    throw SchemaError("$.labels", "expected one label per state");
  }
}

Dfao Dfao::constant(unsigned q, const Element& c) {
  return Dfao(q, 0, {std::vector<std::size_t>(q, 0)}, {c});
}

Dfao Dfao::rerooted(std::size_t state) const {
  return Dfao(q_, state, delta_, out_, labels_);
}

bool operator==(const Dfao& a, const Dfao& b) {
  return a.q_ == b.q_ && a.initial_ == b.initial_ && a.delta_ == b.delta_ && a.out_ == b.out_ &&
         a.labels_ == b.labels_;
}

Element run_from(const Dfao& a, std::size_t state, std::uint64_t n) {
  while (n > 0) {
    state = a.next(state, static_cast<unsigned>(n % a.q()));
    n /= a.q();
  }
  return a.output(state);
}

Element run(const Dfao& a, std::uint64_t n) { return run_from(a, a.initial(), n); }

TruncSeries1 generate(const Dfao& a, std::size_t n_max) {
  std::vector<Element> c;
  c.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) c.push_back(run(a, n));
  return TruncSeries1(a.field(), std::move(c));
}

namespace {

// Builds the automaton whose states are classes[] of the old ones, renumbered
// breadth-first from the initial state.
Dfao quotient(const Dfao& a, const std::vector<std::size_t>& cls, std::size_t count) {
  std::vector<std::size_t> rep(count, a.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (rep[cls[s]] == a.size()) rep[cls[s]] = s;
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> index(count, count);
  std::deque<std::size_t> queue{cls[a.initial()]};
  index[cls[a.initial()]] = 0;
  order.push_back(cls[a.initial()]);
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (unsigned r = 0; r < a.q(); ++r) {
      const std::size_t t = cls[a.next(rep[c], r)];
      if (index[t] == count) {
        index[t] = order.size();
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  std::vector<std::vector<std::size_t>> delta;
  std::vector<Element> out;
  std::vector<std::string> labels;
  for (std::size_t c : order) {
    std::vector<std::size_t> row;
    for (unsigned r = 0; r < a.q(); ++r) row.push_back(index[cls[a.next(rep[c], r)]]);
    delta.push_back(std::move(row));
    out.push_back(a.output(rep[c]));
    if (!a.labels().empty()) labels.push_back(a.labels()[rep[c]]);
  }
  return Dfao(a.q(), 0, std::move(delta), std::move(out), std::move(labels));
}

}  // namespace

Dfao trim(const Dfao& a) {
  std::vector<std::size_t> cls(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) cls[s] = s;
  return quotient(a, cls, a.size());
}

Dfao minimize(const Dfao& a) {
  const Dfao t = trim(a);
  std::vector<std::size_t> cls(t.size());
  std::size_t count = 0;
  {
    std::map<std::string, std::size_t> ids;
    for (std::size_t s = 0; s < t.size(); ++s) {
      auto [it, fresh] = ids.emplace(t.output(s).to_string(), ids.size());
      cls[s] = it->second;
    }
    count = ids.size();
  }
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> refined(t.size());
    for (std::size_t s = 0; s < t.size(); ++s) {
      std::vector<std::size_t> sig{cls[s]};
      for (unsigned r = 0; r < t.q(); ++r) sig.push_back(cls[t.next(s, r)]);
      auto [it, fresh] = ids.emplace(std::move(sig), ids.size());
      refined[s] = it->second;
    }
    cls = std::move(refined);
    if (ids.size() == count) break;
    count = ids.size();
  }
  return quotient(t, cls, count);
}

Dfao zero_consistent(const Dfao& a) {
  // State (s, c): current state s, pending output c = output of the state
  // reached after the last nonzero digit.
  std::map<std::pair<std::size_t, std::string>, std::size_t> ids;
  std::vector<std::pair<std::size_t, Element>> states;
  auto intern = [&](std::size_t s, const Element& c) {
    auto [it, fresh] = ids.emplace(std::make_pair(s, c.to_string()), states.size());
    if (fresh) states.emplace_back(s, c);
    return it->second;
  };
  intern(a.initial(), a.output(a.initial()));
  std::vector<std::vector<std::size_t>> delta;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto [s, c] = states[i];
    std::vector<std::size_t> row;
    for (unsigned r = 0; r < a.q(); ++r) {
      const std::size_t t = a.next(s, r);
      row.push_back(r == 0 ? intern(t, c) : intern(t, a.output(t)));
    }
    delta.push_back(std::move(row));
  }
  std::vector<Element> out;
  std::vector<std::string> labels;
  for (const auto& [s, c] : states) {
    out.push_back(c);
    if (!a.labels().empty()) labels.push_back(a.labels()[s]);
  }
  return Dfao(a.q(), 0, std::move(delta), std::move(out), std::move(labels));
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const Dfao& a) {
  std::ostringstream os;
  os << "digraph dfao {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  start [shape=point];\n";
  os << "  start -> s" << a.initial() << ";\n";
  for (std::size_t s = 0; s < a.size(); ++s) {
    os << "  s" << s << " [label=\"" << s << ":" << dot_escape(a.output(s).to_string()) << "\"";
    if (!a.labels().empty() && !a.labels()[s].empty()) {
      os << ", xlabel=\"" << dot_escape(a.labels()[s]) << "\"";
    }
    os << "];\n";
  }
  for (std::size_t s = 0; s < a.size(); ++s) {
    std::map<std::size_t, std::string> edges;
    for (unsigned r = 0; r < a.q(); ++r) {
      std::string& label = edges[a.next(s, r)];
      if (!label.empty()) label += ",";
      label += std::to_string(r);
    }
    for (const auto& [t, label] : edges) {
      os << "  s" << s << " -> s" << t << " [label=\"" << label << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

namespace detail {

ordered_json field_to_json(const Field& f) {
  ordered_json j;
  switch (f.kind()) {
    case Field::Kind::prime:
      j["kind"] = "prime";
      j["p"] = f.characteristic();
      break;
    case Field::Kind::extension:
      j["kind"] = "extension";
      j["p"] = f.characteristic();
      j["k"] = f.degree();
      j["modulus"] = f.modulus();
      break;
    case Field::Kind::rational:
      j["kind"] = "rational";
      break;
  }
  return j;
}

}  // namespace detail

namespace {

const ordered_json& require(const ordered_json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing");
  return *it;
}

std::uint64_t require_uint(const ordered_json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw SchemaError(path, "expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

namespace detail {

const Field& field_from_json(const ordered_json& j, const std::string& path) {
  const ordered_json& kind = require(j, "kind", path);
  if (!kind.is_string()) throw SchemaError(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "rational") return Field::rationals();
    if (k == "prime") return Field::prime(require_uint(require(j, "p", path), path + ".p"));
    if (k == "extension") {
      const std::uint64_t p = require_uint(require(j, "p", path), path + ".p");
      const std::uint64_t deg = require_uint(require(j, "k", path), path + ".k");
      std::vector<std::uint64_t> modulus;
      if (j.contains("modulus")) {
        const auto& m = j["modulus"];
        if (!m.is_array()) throw SchemaError(path + ".modulus", "expected an array");
        for (std::size_t i = 0; i < m.size(); ++i) {
          modulus.push_back(require_uint(m[i], path + ".modulus[" + std::to_string(i) + "]"));
        }
      }
      return Field::extension(p, static_cast<unsigned>(deg), std::move(modulus));
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(path + ".kind", "unknown field kind '" + k + "'");
}

}  // namespace detail

std::string to_json(const Dfao& a) {
  ordered_json j;
  j["q"] = a.q();
  j["digit_order"] = "lsd";
  j["initial"] = a.initial();
  j["transitions"] = a.transitions();
  ordered_json outs = ordered_json::array();
  for (const auto& o : a.outputs()) outs.push_back(o.to_string());
  j["outputs"] = std::move(outs);
  if (!a.labels().empty()) j["labels"] = a.labels();
  j["field"] = detail::field_to_json(a.field());
  return j.dump(2) + "\n";
}

Dfao from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("$", "expected an object");
  const std::uint64_t q = require_uint(require(j, "q", "$"), "$.q");
  if (q < 2 || q > (std::uint64_t{1} << 32)) throw SchemaError("$.q", "digit base out of range");
  if (j.contains("digit_order")) {
    const auto& d = j["digit_order"];
    if (!d.is_string() || d.get<std::string>() != "lsd") {
      throw SchemaError("$.digit_order", "only \"lsd\" is supported");
    }
  }
  const std::size_t initial = require_uint(require(j, "initial", "$"), "$.initial");
  const ordered_json& tr = require(j, "transitions", "$");
  if (!tr.is_array()) throw SchemaError("$.transitions", "expected an array");
  std::vector<std::vector<std::size_t>> delta;
  for (std::size_t s = 0; s < tr.size(); ++s) {
    const std::string path = "$.transitions[" + std::to_string(s) + "]";
    if (!tr[s].is_array()) throw SchemaError(path, "expected an array");
    std::vector<std::size_t> row;
    for (std::size_t r = 0; r < tr[s].size(); ++r) {
      row.push_back(require_uint(tr[s][r], path + "[" + std::to_string(r) + "]"));
    }
    delta.push_back(std::move(row));
  }
  const Field& field = detail::field_from_json(require(j, "field", "$"), "$.field");
  const ordered_json& outs = require(j, "outputs", "$");
  if (!outs.is_array()) throw SchemaError("$.outputs", "expected an array");
  std::vector<Element> out;
  for (std::size_t s = 0; s < outs.size(); ++s) {
    const std::string path = "$.outputs[" + std::to_string(s) + "]";
    if (!outs[s].is_string() && !outs[s].is_number_integer()) {
      throw SchemaError(path, "expected a field-element literal");
    }
    const std::string lit = outs[s].is_string() ? outs[s].get<std::string>() : outs[s].dump();
    try {
      out.push_back(field.parse_element(lit));
    } catch (const Error& e) {
      throw SchemaError(path, e.what());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels") && !j["labels"].is_null()) {
    const auto& l = j["labels"];
    if (!l.is_array()) throw SchemaError("$.labels", "expected an array");
    for (std::size_t s = 0; s < l.size(); ++s) {
      if (!l[s].is_string()) throw SchemaError("$.labels[" + std::to_string(s) + "]", "expected a string");
      labels.push_back(l[s].get<std::string>());
    }
  }
  return Dfao(static_cast<unsigned>(q), initial, std::move(delta), std::move(out), std::move(labels));
}

}  // namespace algdiag
