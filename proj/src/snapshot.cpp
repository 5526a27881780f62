#include "pcl/snapshot.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pcl/errors.hpp"
#include "pcl/experiments.hpp"

namespace pcl {

namespace {

template <typename Clause>
void write_states(const Clause& clause, std::ostream& out) {
  for (std::size_t k = 0; k < clause.automata.size(); ++k) {
    if (k) out << ' ';
    out << clause.automata[k].state();
  }
  out << '\n';
}

int half_size_of(const std::vector<Automaton>& automata) {
  return automata.front().half_size();
}

std::istringstream next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw invalid_parameter(std::string("snapshot: missing ") + what);
  return std::istringstream(line);
}

template <typename T>
T read_value(std::istringstream& line, const char* what) {
  T value{};
  if (!(line >> value)) throw invalid_parameter(std::string("snapshot: bad ") + what);
  return value;
}

void expect_end(std::istringstream& line, const char* what) {
  std::string extra;
  if (line >> extra) throw invalid_parameter(std::string("snapshot: trailing data after ") + what);
}

double read_probability(std::istringstream& line, const char* what) {
  std::string text = read_value<std::string>(line, what);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw invalid_parameter(std::string("snapshot: bad ") + what + " '" + text + "'");
  return value;
}

std::vector<Automaton> read_states(std::istream& in, std::size_t n, int half_size) {
  auto line = next_line(in, "automaton states");
  std::vector<Automaton> automata;
  automata.reserve(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) automata.emplace_back(half_size, read_value<int>(line, "automaton state"));
  expect_end(line, "automaton states");
  return automata;
}

std::pair<std::size_t, int> read_dimensions(std::istream& in) {
  auto line = next_line(in, "dimensions");
  const auto n = read_value<std::size_t>(line, "feature count");
  const auto half = read_value<int>(line, "half size");
  expect_end(line, "dimensions");
  check_feature_count(n);
  return {n, half};
}

bool blank_rest(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return false;
  }
  return true;
}

PclMachine read_pcl_body(std::istream& in) {
  const auto [n, half] = read_dimensions(in);
  std::vector<PclClause> clauses;
  std::string text;
  while (std::getline(in, text)) {
    if (text.find_first_not_of(" \t\r") == std::string::npos) {
      if (!blank_rest(in)) throw invalid_parameter("snapshot: content after blank line");
      break;
    }
    std::istringstream line(text);
    PclClause clause;
    clause.p = read_probability(line, "inclusion probability");
    expect_end(line, "inclusion probability");
    clause.automata = read_states(in, n, half);
    clauses.push_back(std::move(clause));
  }
  return PclMachine(n, std::move(clauses));
}

TmMachine read_tm_body(std::istream& in) {
  const auto [n, half] = read_dimensions(in);
  auto line = next_line(in, "TM parameters");
  TmParams params;
  params.margin = read_value<int>(line, "margin");
  params.specificity = read_probability(line, "specificity");
  const int boost = read_value<int>(line, "boost flag");
  if (boost != 0 && boost != 1) throw invalid_parameter("snapshot: boost flag must be 0 or 1");
  params.boost_true_positive = boost == 1;
  expect_end(line, "TM parameters");
  std::vector<TmClause> clauses;
  while (in.peek() != std::char_traits<char>::eof()) {
    if (in.peek() == '\n') {
      if (!blank_rest(in)) throw invalid_parameter("snapshot: content after blank line");
      break;
    }
    TmClause clause;
    clause.polarity = polarity_of(clauses.size());
    clause.automata = read_states(in, n, half);
    clauses.push_back(std::move(clause));
  }
  return TmMachine(n, std::move(clauses), params);
}

std::string read_tag(std::istream& in) {
  auto line = next_line(in, "header");
  auto tag = read_value<std::string>(line, "header");
  expect_end(line, "header");
  return tag;
}

}  // namespace

void write_snapshot(const PclMachine& machine, std::ostream& out) {
  out << "pcl\n" << machine.features() << ' ' << half_size_of(machine.clauses().front().automata) << '\n';
  for (const auto& clause : machine.clauses()) {
    out << format_probability(clause.p) << '\n';
    write_states(clause, out);
  }
}

void write_snapshot(const TmMachine& machine, std::ostream& out) {
  const auto& params = machine.params();
  out << "tm\n" << machine.features() << ' ' << half_size_of(machine.clauses().front().automata) << '\n';
  out << params.margin << ' ' << format_probability(params.specificity) << ' ' << (params.boost_true_positive ? 1 : 0)
      << '\n';
  for (const auto& clause : machine.clauses()) write_states(clause, out);
}

MachineSnapshot read_snapshot(std::istream& in) {
  const auto tag = read_tag(in);
  if (tag == "pcl") return read_pcl_body(in);
  if (tag == "tm") return read_tm_body(in);
  throw invalid_parameter("snapshot: unknown machine kind '" + tag + "'");
}

PclMachine read_pcl_snapshot(std::istream& in) {
  if (read_tag(in) != "pcl") throw invalid_parameter("snapshot: not a PCL machine");
  return read_pcl_body(in);
}

TmMachine read_tm_snapshot(std::istream& in) {
  if (read_tag(in) != "tm") throw invalid_parameter("snapshot: not a TM machine");
  return read_tm_body(in);
}

}  // namespace pcl
