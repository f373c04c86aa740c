// Copyright 2026 The mixsig Authors.
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

#include "mixsig/instance_io.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "mixsig/error.h"

namespace mixsig {

namespace {

using nlohmann::json;

// Builds a DOM like nlohmann's own parser, except that floating-point
// literals are stored as their source text.
class ExactSax {
 public:
  explicit ExactSax(std::string_view text) : text_(text) {}

  bool null() { return Add(nullptr); }
  bool boolean(bool v) { return Add(v); }
  bool number_integer(json::number_integer_t v) { return Add(v); }
  bool number_unsigned(json::number_unsigned_t v) { return Add(v); }
  bool number_float(json::number_float_t, const json::string_t& s) {
    return Add(s);
  }
  bool string(json::string_t& s) { return Add(s); }
  bool binary(json::binary_t& b) { return Add(json::binary(b)); }
  bool start_object(std::size_t) {
    json* slot = Add(json::object());
    stack_.push_back(slot);
    return true;
  }
  bool key(json::string_t& k) {
    key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    json* slot = Add(json::array());
    stack_.push_back(slot);
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string& last_token,
                   const nlohmann::detail::exception&) {
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k + 1 < position && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParseError,
                "invalid JSON at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + " near '" + last_token + "'");
  }

  json result() { return std::move(root_); }

 private:
  template <typename T>
  json* Add(T&& value) {
    if (stack_.empty()) {
      root_ = json(std::forward<T>(value));
      return &root_;
    }
    json& parent = *stack_.back();
    if (parent.is_array()) {
      parent.emplace_back(std::forward<T>(value));
      return &parent.back();
    }
    json& slot = parent[key_];
    slot = json(std::forward<T>(value));
    return &slot;
  }

  std::string_view text_;
  json root_;
  std::vector<json*> stack_;
  std::string key_;
};

// A JSON integer or a string of decimal digits; big values stay exact.
mpz_class IntegerFromJson(const json& value) {
  if (value.is_number_unsigned()) {
    return mpz_class(std::to_string(value.get<uint64_t>()));
  }
  if (value.is_number_integer()) {
    return mpz_class(std::to_string(value.get<int64_t>()));
  }
  if (value.is_string()) {
    const std::string& s = value.get_ref<const std::string&>();
    std::size_t digits = s.find_first_not_of("-");
    if (s.size() > digits && digits <= 1 &&
        s.find_first_not_of("0123456789", digits) == std::string::npos) {
      return mpz_class(s);
    }
  }
  throw Error(ErrorCode::kParseError, "num and den must be integers");
}

const json& Field(const json& object, const std::string& name) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw Error(ErrorCode::kParseError, "missing field \"" + name + "\"");
  }
  return *it;
}

std::vector<Rational> VectorFromJson(const json& value,
                                     const std::string& path) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kParseError, path + ": expected an array");
  }
  std::vector<Rational> out;
  for (std::size_t k = 0; k < value.size(); ++k) {
    out.push_back(
        RationalFromJson(value[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

RationalMatrix MatrixFromJson(const json& value, const std::string& path) {
  if (!value.is_array() || value.empty()) {
    throw Error(ErrorCode::kParseError, path + ": expected a nonempty array");
  }
  RationalMatrix rows;
  for (std::size_t i = 0; i < value.size(); ++i) {
    std::string row_path = path + "[" + std::to_string(i) + "]";
    rows.push_back(VectorFromJson(value[i], row_path));
    if (rows.back().size() != rows.front().size() || rows.back().empty()) {
      throw Error(ErrorCode::kParseError,
                  row_path + ": expected " + std::to_string(rows[0].size()) +
                      " entries, got " + std::to_string(rows.back().size()));
    }
  }
  return rows;
}

void CheckCount(const json& object, const std::string& name,
                std::size_t actual) {
  auto it = object.find(name);
  if (it == object.end()) return;
  if (!it->is_number_integer() || it->get<long long>() < 1) {
    throw Error(ErrorCode::kParseError,
                name + ": expected a positive integer");
  }
  if (it->get<std::size_t>() != actual) {
    throw Error(ErrorCode::kParseError,
                name + " = " + std::to_string(it->get<long long>()) +
                    " but the matrix has " + std::to_string(actual));
  }
}

json MatrixToJson(const RationalMatrix& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const Rational& x : row) r.push_back(RationalToJson(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

json ParseJsonExact(std::string_view text) {
  ExactSax sax(text);
  json::sax_parse(text.begin(), text.end(), &sax);
  return sax.result();
}

Rational RationalFromJson(const json& value, const std::string& path) {
  try {
    if (value.is_number_integer()) return Rational(IntegerFromJson(value));
    if (value.is_string()) return ParseRational(value.get<std::string>());
    if (value.is_object() && value.contains("num") && value.contains("den")) {
      mpz_class num = IntegerFromJson(value["num"]);
      mpz_class den = IntegerFromJson(value["den"]);
      if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.message());
  }
  throw Error(ErrorCode::kParseError,
              path + ": expected a number, a decimal or \"p/q\" string, or "
                     "{\"num\", \"den\"}");
}

json RationalToJson(const Rational& value) {
  std::string decimal = ToTerminatingDecimal(value);
  if (!decimal.empty()) return decimal;
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
    return {{"num", value.get_num().get_si()},
            {"den", value.get_den().get_si()}};
  }
  return {{"num", value.get_num().get_str()},
          {"den", value.get_den().get_str()}};
}

AuctionInstance ParseInstance(std::string_view text) {
  json doc = ParseJsonExact(text);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "instance must be a JSON object");
  }
  RationalMatrix v = MatrixFromJson(Field(doc, "valuations"), "valuations");
  CheckCount(doc, "n", v.size());
  CheckCount(doc, "m", v[0].size());
  if (!doc.contains("prior")) return AuctionInstance::WithUniformPrior(std::move(v));
  std::vector<Rational> prior = VectorFromJson(doc["prior"], "prior");
  if (prior.size() != v[0].size()) {
    throw Error(ErrorCode::kBadPrior,
                "prior has " + std::to_string(prior.size()) +
                    " entries for " + std::to_string(v[0].size()) + " types");
  }
  return AuctionInstance::Create(std::move(v), std::move(prior));
}

PsiMatrix ParseDivisible(std::string_view text) {
  json doc = ParseJsonExact(text);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "divisible file must be a JSON object");
  }
  if (doc.contains("kind") && doc["kind"] != "divisible") {
    throw Error(ErrorCode::kParseError, "kind: expected \"divisible\"");
  }
  RationalMatrix psi = MatrixFromJson(Field(doc, "psi"), "psi");
  CheckCount(doc, "n", psi.size());
  CheckCount(doc, "m", psi[0].size());
  return PsiMatrix::Create(std::move(psi));
}

std::vector<Rational> ParsePrior(std::string_view text) {
  json doc = ParseJsonExact(text);
  if (doc.is_object()) return VectorFromJson(Field(doc, "prior"), "prior");
  return VectorFromJson(doc, "prior");
}

std::string WriteInstance(const AuctionInstance& instance) {
  json prior = json::array();
  for (const Rational& p : instance.prior()) prior.push_back(RationalToJson(p));
  json doc = {{"n", instance.num_bidders()},
              {"m", instance.num_types()},
              {"valuations", MatrixToJson(instance.valuations())},
              {"prior", std::move(prior)}};
  return doc.dump(2) + "\n";
}

std::string WriteDivisible(const PsiMatrix& psi) {
  json doc = {{"kind", "divisible"},
              {"n", psi.num_bidders()},
              {"m", psi.num_types()},
              {"psi", MatrixToJson(psi.entries())}};
  return doc.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace mixsig
