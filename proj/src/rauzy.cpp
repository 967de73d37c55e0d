#include "substfreq/rauzy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace substfreq {

FrequencySource frid_source(const FridContext& ctx) {
  return [&ctx](const Word& w) { return ctx.frequency(w); };
}

FrequencySource constant_source(Rational value) {
  return [value](const Word&) { return value; };
}

RauzyGraph rauzy(const LanguageIndex& idx, const FrequencySource& freqs, int n) {
  if (n < 1) throw std::invalid_argument("rauzy: order must be >= 1");
  if (n + 1 > idx.max_len())
    throw std::out_of_range("rauzy: index depth must be >= n + 1");
  RauzyGraph g;
  g.order = n;
  for (const Word& w : idx.factors(n)) g.vertices.emplace(w, freqs(w));
  for (const Word& e : idx.factors(n + 1)) g.edges.push_back({e, freqs(e)});
  return g;
}

ReducedRauzyGraph reduce(const RauzyGraph& g, const LanguageIndex& idx) {
  ReducedRauzyGraph r;
  r.order = g.order;
  for (const auto& [w, freq] : g.vertices)
    if (idx.is_special(w)) r.vertices.emplace(w, freq);
  if (r.vertices.empty())
    throw PeriodicLanguageError("reduce: no special factors at order " +
                                std::to_string(g.order) + " (periodic word)");

  std::map<Word, std::vector<const RauzyEdge*>> out_edges;
  for (const RauzyEdge& e : g.edges) out_edges[e.source()].push_back(&e);

  for (const auto& [start, start_freq] : r.vertices) {
    for (const RauzyEdge* first : out_edges[start]) {
      Word path = first->word;
      Word cur = first->target();
      std::size_t steps = 0;
      while (!r.vertices.count(cur)) {
        const auto& nexts = out_edges[cur];
        if (nexts.size() != 1)
          throw std::runtime_error("reduce: non-special vertex " + cur.str() +
                                   " with out-degree " + std::to_string(nexts.size()));
        if (nexts[0]->freq != first->freq)
          throw std::runtime_error("reduce: frequency changed along a simple path at " +
                                   cur.str());
        path.push_back(nexts[0]->word.back());
        cur = nexts[0]->target();
        if (++steps > g.edges.size())
          throw std::runtime_error("reduce: cycle of non-special vertices");
      }
      r.edges.push_back({start, cur, std::move(path), first->freq});
    }
  }
  std::sort(r.edges.begin(), r.edges.end(),
            [](const ReducedEdge& a, const ReducedEdge& b) { return a.path < b.path; });
  return r;
}

namespace {

template <typename Graph, typename EdgeEndpoints>
std::vector<KirchhoffViolation> check_kirchhoff(const Graph& g, EdgeEndpoints endpoints) {
  std::map<Word, Rational> in_sum, out_sum;
  for (const auto& e : g.edges) {
    auto [src, dst] = endpoints(e);
    out_sum[src] += e.freq;
    in_sum[dst] += e.freq;
  }
  std::vector<KirchhoffViolation> violations;
  for (const auto& [v, freq] : g.vertices) {
    const Rational in = in_sum.count(v) ? in_sum[v] : Rational(0);
    const Rational out = out_sum.count(v) ? out_sum[v] : Rational(0);
    if (in != freq || out != freq) violations.push_back({v, in, out, freq});
  }
  return violations;
}

}  // namespace

std::vector<KirchhoffViolation> verify_kirchhoff(const RauzyGraph& g) {
  return check_kirchhoff(g, [](const RauzyEdge& e) {
    return std::pair<Word, Word>(e.source(), e.target());
  });
}

std::vector<KirchhoffViolation> verify_kirchhoff(const ReducedRauzyGraph& g) {
  return check_kirchhoff(
      g, [](const ReducedEdge& e) { return std::pair<Word, Word>(e.source, e.target); });
}

namespace {

template <typename EdgeWriter>
std::string dot_text(const std::string& name, const std::map<Word, Rational>& vertices,
                     EdgeWriter write_edges) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (const auto& [w, freq] : vertices)
    os << "  \"" << w.str() << "\" [label=\"" << w.str() << " [" << fraction_string(freq)
       << "]\"];\n";
  write_edges(os);
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const RauzyGraph& g) {
  return dot_text("rauzy_" + std::to_string(g.order), g.vertices, [&](std::ostringstream& os) {
    for (const RauzyEdge& e : g.edges)
      os << "  \"" << e.source().str() << "\" -> \"" << e.target().str() << "\" [label=\""
         << e.word.str() << " [" << fraction_string(e.freq) << "]\"];\n";
  });
}

std::string export_dot(const ReducedRauzyGraph& g) {
  return dot_text("reduced_rauzy_" + std::to_string(g.order), g.vertices,
                  [&](std::ostringstream& os) {
                    for (const ReducedEdge& e : g.edges)
                      os << "  \"" << e.source.str() << "\" -> \"" << e.target.str()
                         << "\" [label=\"" << e.path.str() << " [" << fraction_string(e.freq)
                         << "]\"];\n";
                  });
}

namespace {

nlohmann::ordered_json vertices_json(const std::map<Word, Rational>& vertices) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [w, freq] : vertices)
    arr.push_back({{"word", w.str()}, {"freq", fraction_string(freq)}});
  return arr;
}

}  // namespace

std::string export_json(const RauzyGraph& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order;
  j["vertices"] = vertices_json(g.vertices);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const RauzyEdge& e : g.edges)
    edges.push_back({{"src", e.source().str()},
                     {"dst", e.target().str()},
                     {"word", e.word.str()},
                     {"freq", fraction_string(e.freq)}});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

std::string export_json(const ReducedRauzyGraph& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order;
  j["vertices"] = vertices_json(g.vertices);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const ReducedEdge& e : g.edges)
    edges.push_back({{"src", e.source.str()},
                     {"dst", e.target.str()},
                     {"word", e.path.str()},
                     {"freq", fraction_string(e.freq)}});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

}  // namespace substfreq
