// Copyright 2026 The Authors.
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

#include "indsys/params.h"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "indsys/errors.h"

namespace indsys {
namespace {

std::int64_t ParseInt(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw FormatError("value of '" + key + "' is not an integer: '" + text +
                      "'");
  }
  if (used != text.size()) {
    throw FormatError("value of '" + key + "' is not an integer: '" + text +
                      "'");
  }
  return value;
}

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Rational Rational::Make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw ParameterError("rho must be a non-negative rational with positive "
                         "denominator, got " +
                         std::to_string(num) + "/" + std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational Rational::Parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Make(ParseInt("rho", text), 1);
  return Make(ParseInt("rho", text.substr(0, slash)),
              ParseInt("rho", text.substr(slash + 1)));
}

std::string Rational::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string ToString(ParamMode mode) {
  return mode == ParamMode::kPaper ? "paper" : "toy";
}

std::int64_t Params::RhoThreshold() const {
  // n <= 2^61 and rho is small in practice; use 128-bit to be exact anyway.
  const __int128 prod = static_cast<__int128>(rho_.num) * n();
  return static_cast<std::int64_t>(prod / rho_.den);
}

std::vector<std::string> Params::Warnings() const {
  std::vector<std::string> out;
  if (mode_ == ParamMode::kPaper && l_ < kPaperMinL) {
    out.push_back("l = " + std::to_string(l_) +
                  " is below 2^10; the query lower bound is not claimed for "
                  "this instance");
  }
  return out;
}

std::string Params::ToString() const {
  if (mode_ == ParamMode::kPaper) return "paper(l=" + std::to_string(l_) + ")";
  return "toy(m=" + std::to_string(m_) + ",k=" + std::to_string(k_) +
         ",l=" + std::to_string(l_) + ")";
}

Params MakePaperParams(std::int64_t l) {
  if (l < 1) {
    throw ParameterError("paper mode requires l >= 1, got l = " +
                         std::to_string(l));
  }
  if (l > kPaperMaxL) {
    throw ParameterError("paper mode requires l <= 2^28 so that n fits in 64 "
                         "bits, got l = " +
                         std::to_string(l));
  }
  Params p;
  p.mode_ = ParamMode::kPaper;
  p.l_ = l;
  p.k_ = 7 * l;
  p.m_ = 8 * l * l;
  p.rho_ = Rational{1, 17};
  return p;
}

Params MakeToyParams(std::int64_t m, std::int64_t k, std::int64_t l,
                     Rational rho) {
  if (k < 1) {
    throw ParameterError("toy mode requires k >= 1, got k = " +
                         std::to_string(k));
  }
  if (l < 1) {
    throw ParameterError("toy mode requires l >= 1, got l = " +
                         std::to_string(l));
  }
  if (m > (std::int64_t{1} << 40)) {
    throw ParameterError("toy mode requires m <= 2^40");
  }
  if (k + l > m) {
    throw ParameterError("toy mode requires k + l <= m, got k + l = " +
                         std::to_string(k + l) + " > m = " + std::to_string(m));
  }
  Params p;
  p.mode_ = ParamMode::kToy;
  p.l_ = l;
  p.k_ = k;
  p.m_ = m;
  p.rho_ = Rational::Make(rho.num, rho.den);
  return p;
}

std::string FormatInstance(const Params& params) {
  std::ostringstream out;
  out << "mode=" << ToString(params.mode()) << '\n'
      << "l=" << params.l() << '\n'
      << "k=" << params.k() << '\n'
      << "m=" << params.m() << '\n'
      << "n=" << params.n() << '\n'
      << "rho=" << params.rho().ToString() << '\n';
  return out.str();
}

Params ParseInstance(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw FormatError("instance line " + std::to_string(line_no) +
                        " is not key=value: '" + line + "'");
    }
    const std::string key = Trim(line.substr(0, eq));
    if (!kv.emplace(key, Trim(line.substr(eq + 1))).second) {
      throw FormatError("duplicate key '" + key + "' in instance");
    }
  }
  for (const char* key : {"mode", "l", "k", "m", "n", "rho"}) {
    if (!kv.count(key)) {
      throw FormatError(std::string("instance is missing key '") + key + "'");
    }
  }
  if (kv.size() != 6) throw FormatError("instance has unknown keys");

  const std::string& mode = kv["mode"];
  const std::int64_t l = ParseInt("l", kv["l"]);
  const std::int64_t k = ParseInt("k", kv["k"]);
  const std::int64_t m = ParseInt("m", kv["m"]);
  const std::int64_t n = ParseInt("n", kv["n"]);
  const Rational rho = Rational::Parse(kv["rho"]);

  Params p;
  if (mode == "paper") {
    p = MakePaperParams(l);
    if (!(p.rho() == rho)) {
      throw ParameterError("paper mode requires rho = 1/17, got " +
                           rho.ToString());
    }
  } else if (mode == "toy") {
    p = MakeToyParams(m, k, l, rho);
  } else {
    throw FormatError("unknown mode '" + mode + "'");
  }
  if (p.k() != k) throw ParameterError("paper mode requires k = 7l");
  if (p.m() != m) throw ParameterError("paper mode requires m = 8l^2");
  if (p.n() != n) throw ParameterError("instance requires n = 2m");
  return p;
}

void WriteInstanceFile(const Params& params, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << FormatInstance(params);
  if (!out) throw FormatError("failed writing '" + path + "'");
}

Params ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

}  // namespace indsys
