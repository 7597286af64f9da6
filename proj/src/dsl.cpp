// Copyright 2026 The qnd-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnd/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qnd::dsl {
namespace {

__extension__ typedef __int128 Int128;

constexpr Int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr int kMaxDigits = 19;
constexpr int kMaxDecimalDigits = 18;

Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string int128_to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  if (negative) value = -value;
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

/// Reduces num/den; nullopt if the result does not fit in 64 bits.
std::optional<Rational> make_rational(Int128 num, Int128 den) {
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kInt64Max || num < -kInt64Max || den > kInt64Max) return std::nullopt;
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

const std::vector<std::string> kKeywords = {"signal", "meter", "eta",    "balanced_loss", "sweep",
                                            "table",  "densmat", "run", "output"};
const std::vector<std::string> kSignalNames = {"H", "V", "D+", "D-", "R+", "R-"};

std::optional<StandardInput> signal_name(std::string_view name) {
  static constexpr StandardInput kInputs[] = {StandardInput::H,     StandardInput::V,     StandardInput::DPlus,
                                              StandardInput::DMinus, StandardInput::RPlus, StandardInput::RMinus};
  for (std::size_t i = 0; i < kSignalNames.size(); ++i) {
    if (kSignalNames[i] == name) return kInputs[i];
  }
  return std::nullopt;
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Cursor over one line with comments removed. Positions are 0-based indices
/// into the raw line.
class LineCursor {
 public:
  LineCursor(std::string_view content, int line, std::size_t last_index, std::vector<ParseError>& errors)
      : content_(content), line_(line), last_index_(last_index), errors_(errors) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= content_.size(); }
  char peek() const { return at_end() ? '\0' : content_[pos_]; }

  void skip_ws() {
    while (!at_end() && (content_[pos_] == ' ' || content_[pos_] == '\t' || content_[pos_] == '\r')) ++pos_;
  }

  template <typename Pred>
  std::string_view take_while(Pred pred) {
    const std::size_t start = pos_;
    while (!at_end() && pred(content_[pos_])) ++pos_;
    return content_.substr(start, pos_ - start);
  }

  bool accept(std::string_view literal) {
    if (content_.substr(pos_, literal.size()) != literal) return false;
    pos_ += literal.size();
    return true;
  }

  bool expect(std::string_view literal) {
    skip_ws();
    if (accept(literal)) return true;
    fail(pos_, "expected '" + std::string(literal) + "'", {std::string(literal)});
    return false;
  }

  void fail(std::size_t at, std::string message, std::vector<std::string> expected = {}) {
    const std::size_t index = std::min(at, last_index_);
    errors_.push_back({line_, static_cast<int>(index) + 1, std::move(message), std::move(expected)});
  }

  /// [+-]? digits ('.' digits)? ('/' digits)?
  std::optional<Rational> number() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    const auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    const std::string_view whole = take_while(is_digit);
    std::string_view fraction;
    if (peek() == '.' && pos_ + 1 < content_.size() && is_digit(content_[pos_ + 1])) {
      ++pos_;
      fraction = take_while(is_digit);
    }
    std::string_view denominator = "1";
    bool has_denominator = false;
    if (peek() == '/') {
      ++pos_;
      denominator = take_while(is_digit);
      has_denominator = true;
    }
    if (whole.empty() || (has_denominator && denominator.empty()) || (!at_end() && is_word_char(peek())) ||
        (!at_end() && peek() == '.' && !(pos_ + 1 < content_.size() && content_[pos_ + 1] == '.'))) {
      take_while([](char c) { return is_word_char(c) || c == '.' || c == '/'; });
      fail(start, "malformed number '" + std::string(content_.substr(start, pos_ - start)) + "'", {"number"});
      return std::nullopt;
    }
    if (whole.size() + fraction.size() > kMaxDigits || denominator.size() > kMaxDigits) {
      fail(start, "number has too many digits", {"number"});
      return std::nullopt;
    }
    Int128 mantissa = 0;
    for (const char c : whole) mantissa = mantissa * 10 + (c - '0');
    Int128 scale = 1;
    for (const char c : fraction) {
      mantissa = mantissa * 10 + (c - '0');
      scale *= 10;
    }
    Int128 divisor = 0;
    for (const char c : denominator) divisor = divisor * 10 + (c - '0');
    if (divisor == 0) {
      fail(start, "malformed number: zero denominator", {"number"});
      return std::nullopt;
    }
    const auto value = make_rational(negative ? -mantissa : mantissa, scale * divisor);
    if (!value) fail(start, "number out of range", {"number"});
    return value;
  }

  std::optional<int> integer() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string_view digits = take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    if (digits.empty() || (!at_end() && is_word_char(peek()))) {
      take_while(is_word_char);
      fail(start, "expected an integer", {"integer"});
      return std::nullopt;
    }
    if (digits.size() > 9) {
      fail(start, "integer out of range", {"integer"});
      return std::nullopt;
    }
    return std::stoi(std::string(digits));
  }

  std::optional<AmplitudePair> amplitude_pair() {
    if (!expect("(")) return std::nullopt;
    const auto h = number();
    if (!h) return std::nullopt;
    if (!expect(",")) return std::nullopt;
    const auto v = number();
    if (!v) return std::nullopt;
    if (!expect(")")) return std::nullopt;
    return AmplitudePair{*h, *v};
  }

  bool finish() {
    skip_ws();
    if (at_end()) return true;
    fail(pos_, "unexpected trailing input", {"end of line"});
    return false;
  }

 private:
  std::string_view content_;
  int line_;
  std::size_t last_index_;
  std::vector<ParseError>& errors_;
  std::size_t pos_ = 0;
};

enum class Stanza { Signal, Meter, Eta, BalancedLoss, Action };

struct Statement {
  Stanza stanza;
  int line;
  std::size_t keyword_column;  // 1-based
  std::optional<SignalSpec> signal;
  std::optional<MeterSpec> meter;
  std::optional<Rational> eta;
  std::optional<bool> balanced_loss;
  std::optional<Action> action;
};

bool in_unit_interval(const Rational& r) { return r.num() >= 0 && r.num() <= r.den(); }

std::optional<Statement> parse_statement(LineCursor& cursor, int line, std::vector<OutputTarget>& outputs,
                                         std::vector<ParseError>& errors) {
  cursor.skip_ws();
  const std::size_t start = cursor.pos();
  const std::string_view keyword = cursor.take_while(is_word_char);
  Statement st{Stanza::Action, line, start + 1, {}, {}, {}, {}, {}};
  const std::size_t error_count = errors.size();

  if (keyword == "signal") {
    st.stanza = Stanza::Signal;
    cursor.skip_ws();
    const std::size_t at = cursor.pos();
    const std::string_view name = cursor.take_while([](char c) { return is_word_char(c) || c == '+' || c == '-'; });
    if (name == "state" && cursor.peek() == '(') {
      const auto pair = cursor.amplitude_pair();
      if (pair) {
        if (pair->h.num() == 0 && pair->v.num() == 0) cursor.fail(at, "signal amplitudes must not both be zero");
        st.signal = *pair;
      }
    } else if (const auto input = signal_name(name)) {
      st.signal = *input;
    } else {
      cursor.fail(at, name.empty() ? "missing signal name" : "unknown signal name '" + std::string(name) + "'",
                  kSignalNames);
    }
  } else if (keyword == "meter") {
    st.stanza = Stanza::Meter;
    cursor.skip_ws();
    const std::size_t at = cursor.pos();
    const std::string_view kind = cursor.take_while(is_word_char);
    if (kind == "dprime") {
      st.meter = MeterDPrime{};
    } else if (kind == "d" && cursor.peek() == '(') {
      cursor.accept("(");
      const std::size_t eta_at = cursor.pos();
      const auto eta = cursor.number();
      if (eta && cursor.expect(")")) {
        if (!in_unit_interval(*eta)) cursor.fail(eta_at, "meter eta must lie in [0, 1]");
        st.meter = MeterD{*eta};
      }
    } else if (kind == "state" && cursor.peek() == '(') {
      const auto pair = cursor.amplitude_pair();
      if (pair) {
        if (pair->h.num() == 0 && pair->v.num() == 0) cursor.fail(at, "meter amplitudes must not both be zero");
        st.meter = *pair;
      }
    } else {
      cursor.fail(at, "unknown meter preparation", {"dprime", "d(", "state("});
    }
  } else if (keyword == "eta") {
    st.stanza = Stanza::Eta;
    cursor.skip_ws();
    const std::size_t at = cursor.pos();
    st.eta = cursor.number();
    if (st.eta && !in_unit_interval(*st.eta)) cursor.fail(at, "eta must lie in [0, 1]");
  } else if (keyword == "balanced_loss") {
    st.stanza = Stanza::BalancedLoss;
    cursor.skip_ws();
    const std::size_t at = cursor.pos();
    const std::string_view value = cursor.take_while(is_word_char);
    if (value == "on" || value == "off") {
      st.balanced_loss = value == "on";
    } else {
      cursor.fail(at, "expected 'on' or 'off'", {"on", "off"});
    }
  } else if (keyword == "sweep") {
    cursor.skip_ws();
    const std::size_t at = cursor.pos();
    if (cursor.take_while(is_word_char) != "alpha") {
      cursor.fail(at, "expected 'alpha'", {"alpha"});
    } else {
      cursor.skip_ws();
      const std::size_t from_at = cursor.pos();
      const auto from = cursor.number();
      if (from && cursor.expect("..")) {
        cursor.skip_ws();
        const std::size_t to_at = cursor.pos();
        const auto to = cursor.number();
        cursor.skip_ws();
        const std::size_t steps_kw = cursor.pos();
        if (to && cursor.take_while(is_word_char) != "steps") {
          cursor.fail(steps_kw, "expected 'steps'", {"steps"});
        } else if (to) {
          cursor.skip_ws();
          const std::size_t steps_at = cursor.pos();
          const auto steps = cursor.integer();
          if (steps) {
            if (!in_unit_interval(*from)) cursor.fail(from_at, "alpha must lie in [0, 1]");
            if (!in_unit_interval(*to)) cursor.fail(to_at, "alpha must lie in [0, 1]");
            if (*to < *from) cursor.fail(to_at, "sweep range must be increasing");
            if (*steps < 2) cursor.fail(steps_at, "a sweep needs at least 2 steps");
            st.action = SweepAction{*from, *to, *steps};
          }
        }
      }
    }
  } else if (keyword == "table") {
    st.action = TableAction{};
  } else if (keyword == "densmat") {
    st.action = DensmatAction{};
  } else if (keyword == "run") {
    st.action = RunAction{};
  } else if (keyword == "output") {
    cursor.skip_ws();
    const std::size_t at = cursor.pos();
    const std::string_view format = cursor.take_while(is_word_char);
    if (format != "csv" && format != "json") {
      cursor.fail(at, "unknown output format", {"csv", "json"});
    } else {
      cursor.skip_ws();
      const std::size_t path_at = cursor.pos();
      const std::string_view path =
          cursor.take_while([](char c) { return c != ' ' && c != '\t' && c != '\r'; });
      if (path.empty()) {
        cursor.fail(path_at, "missing output path", {"path"});
      } else if (cursor.finish()) {
        outputs.push_back({format == "csv" ? OutputFormat::Csv : OutputFormat::Json, std::string(path)});
      }
    }
    return std::nullopt;
  } else {
    cursor.take_while([](char c) { return c != ' ' && c != '\t'; });
    cursor.fail(start, keyword.empty() ? "expected a keyword" : "unknown keyword '" + std::string(keyword) + "'",
                kKeywords);
    return std::nullopt;
  }

  if (errors.size() != error_count) return std::nullopt;
  if (!cursor.finish()) return std::nullopt;
  return st;
}

const char* stanza_name(Stanza stanza) {
  switch (stanza) {
    case Stanza::Signal:
      return "signal";
    case Stanza::Meter:
      return "meter";
    case Stanza::Eta:
      return "eta";
    case Stanza::BalancedLoss:
      return "balanced_loss";
    case Stanza::Action:
      return "action";
  }
  return "?";
}

std::string pair_to_string(const AmplitudePair& pair) {
  return "state(" + to_string(pair.h) + "," + to_string(pair.v) + ")";
}

}  // namespace

// Rational

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min()) {
    throw std::invalid_argument("rational out of range");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  const Int128 lhs = static_cast<Int128>(num_) * other.den_;
  const Int128 rhs = static_cast<Int128>(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Rational& value) {
  if (value.den() == 1) return std::to_string(value.num());
  std::int64_t rest = value.den();
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  const int places = std::max(twos, fives);
  if (rest == 1 && places <= kMaxDecimalDigits) {
    Int128 ten_power = 1;
    for (int i = 0; i < places; ++i) ten_power *= 10;
    const Int128 scaled = static_cast<Int128>(value.num()) * (ten_power / value.den());
    std::string digits = int128_to_string(scaled < 0 ? -scaled : scaled);
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    if (digits.size() <= static_cast<std::size_t>(kMaxDecimalDigits)) {
      digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
      return (scaled < 0 ? "-" : "") + digits;
    }
  }
  return std::to_string(value.num()) + "/" + std::to_string(value.den());
}

std::string to_string(StandardInput input) { return kSignalNames[static_cast<std::size_t>(input)]; }

// Parsing

ParseResult parse(std::string_view source) {
  std::vector<ParseError> errors;
  std::vector<Statement> statements;
  std::vector<OutputTarget> outputs;

  int line_no = 0;
  std::size_t offset = 0;
  std::optional<std::pair<int, int>> first_statement;
  while (offset < source.size()) {
    ++line_no;
    const std::size_t newline = source.find('\n', offset);
    const bool has_newline = newline != std::string_view::npos;
    const std::string_view raw = source.substr(offset, has_newline ? newline - offset : std::string_view::npos);
    offset = has_newline ? newline + 1 : source.size();

    std::string_view content = raw;
    if (const std::size_t hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
    if (content.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    const std::size_t last_index = raw.size() + (has_newline ? 1 : 0) - 1;
    LineCursor cursor(content, line_no, last_index, errors);
    cursor.skip_ws();
    if (!first_statement) first_statement = {line_no, static_cast<int>(cursor.pos()) + 1};
    if (auto st = parse_statement(cursor, line_no, outputs, errors)) statements.push_back(std::move(*st));
  }

  ExperimentPlan plan;
  std::optional<int> first_line[5];
  std::optional<Statement> action_statement;
  for (Statement& st : statements) {
    auto& first = first_line[static_cast<int>(st.stanza)];
    if (first) {
      const std::string message = st.stanza == Stanza::Action
                                      ? "a plan has exactly one action (first on line " + std::to_string(*first) + ")"
                                      : std::string("duplicate '") + stanza_name(st.stanza) +
                                            "' stanza (first on line " + std::to_string(*first) + ")";
      errors.push_back({st.line, static_cast<int>(st.keyword_column), message, {}});
      continue;
    }
    first = st.line;
    switch (st.stanza) {
      case Stanza::Signal:
        plan.signal = st.signal;
        break;
      case Stanza::Meter:
        plan.meter = st.meter;
        break;
      case Stanza::Eta:
        plan.eta = st.eta;
        break;
      case Stanza::BalancedLoss:
        plan.balanced_loss = st.balanced_loss;
        break;
      case Stanza::Action:
        plan.action = *st.action;
        action_statement = st;
        break;
    }
  }

  if (!first_line[static_cast<int>(Stanza::Action)] && errors.empty()) {
    const auto [line, column] = first_statement.value_or(std::pair{1, 1});
    errors.push_back({line, column, "missing action", {"run", "table", "densmat", "sweep"}});
  }
  if (action_statement && std::holds_alternative<SweepAction>(plan.action) && plan.balanced_loss != true) {
    errors.push_back({action_statement->line, static_cast<int>(action_statement->keyword_column),
                      "sweep requires 'balanced_loss on': the 2/3 loss on s_V balances the measurement statistics "
                      "of the weak measurement",
                      {"balanced_loss on"}});
  }

  if (!errors.empty()) {
    std::stable_sort(errors.begin(), errors.end(), [](const ParseError& a, const ParseError& b) {
      return std::tie(a.line, a.column) < std::tie(b.line, b.column);
    });
    return {std::nullopt, std::move(errors)};
  }
  plan.outputs = std::move(outputs);
  return {std::move(plan), {}};
}

std::string print_plan(const ExperimentPlan& plan) {
  std::ostringstream out;
  if (plan.signal) {
    out << "signal ";
    if (const auto* name = std::get_if<StandardInput>(&*plan.signal)) {
      out << to_string(*name);
    } else {
      out << pair_to_string(std::get<AmplitudePair>(*plan.signal));
    }
    out << '\n';
  }
  if (plan.meter) {
    out << "meter ";
    std::visit(
        [&](const auto& meter) {
          using T = std::decay_t<decltype(meter)>;
          if constexpr (std::is_same_v<T, MeterDPrime>) {
            out << "dprime";
          } else if constexpr (std::is_same_v<T, MeterD>) {
            out << "d(" << to_string(meter.eta) << ")";
          } else {
            out << pair_to_string(meter);
          }
        },
        *plan.meter);
    out << '\n';
  }
  if (plan.eta) out << "eta " << to_string(*plan.eta) << '\n';
  if (plan.balanced_loss) out << "balanced_loss " << (*plan.balanced_loss ? "on" : "off") << '\n';
  std::visit(
      [&](const auto& action) {
        using T = std::decay_t<decltype(action)>;
        if constexpr (std::is_same_v<T, RunAction>) {
          out << "run";
        } else if constexpr (std::is_same_v<T, TableAction>) {
          out << "table";
        } else if constexpr (std::is_same_v<T, DensmatAction>) {
          out << "densmat";
        } else {
          out << "sweep alpha " << to_string(action.from) << " .. " << to_string(action.to) << " steps "
              << action.steps;
        }
      },
      plan.action);
  out << '\n';
  for (const OutputTarget& target : plan.outputs) {
    out << "output " << (target.format == OutputFormat::Csv ? "csv" : "json") << ' ' << target.path << '\n';
  }
  return out.str();
}

std::string render(const ParseError& error, std::string_view source) {
  std::ostringstream out;
  out << error.line << ':' << error.column << ": error: " << error.message;
  if (!error.expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < error.expected.size(); ++i) out << (i ? ", " : "") << error.expected[i];
    out << ')';
  }
  out << '\n';

  std::size_t offset = 0;
  for (int line = 1; line < error.line && offset != std::string_view::npos; ++line) {
    offset = source.find('\n', offset);
    if (offset != std::string_view::npos) ++offset;
  }
  if (offset != std::string_view::npos && offset <= source.size()) {
    std::string_view text = source.substr(offset);
    text = text.substr(0, text.find('\n'));
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    out << "  " << text << "\n  " << std::string(static_cast<std::size_t>(std::max(0, error.column - 1)), ' ')
        << "^\n";
  }
  return out.str();
}

// Resolution

namespace {

PolarizationQubit resolve_pair(const AmplitudePair& pair) {
  return PolarizationQubit::normalized(pair.h.value(), pair.v.value());
}

}  // namespace

PolarizationQubit resolve_signal(const ExperimentPlan& plan) {
  if (!plan.signal) return equal_superposition();
  if (const auto* name = std::get_if<StandardInput>(&*plan.signal)) return *standard_input(to_string(*name));
  return resolve_pair(std::get<AmplitudePair>(*plan.signal));
}

PolarizationQubit resolve_meter(const ExperimentPlan& plan) {
  if (!plan.meter) return prepare_meter(kStrongEta);
  return std::visit(
      [](const auto& meter) -> PolarizationQubit {
        using T = std::decay_t<decltype(meter)>;
        if constexpr (std::is_same_v<T, MeterDPrime>) {
          return prepare_meter(kStrongEta);
        } else if constexpr (std::is_same_v<T, MeterD>) {
          return prepare_meter(meter.eta.value());
        } else {
          return resolve_pair(meter);
        }
      },
      *plan.meter);
}

CircuitConfig resolve_config(const ExperimentPlan& plan) {
  CircuitConfig config;
  if (plan.eta) config.eta = plan.eta->value();
  config.balanced_loss = plan.balanced_loss.value_or(false);
  return config;
}

}  // namespace qnd::dsl
