#include "evosieve/basis_io.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "evosieve/errors.hpp"

namespace evosieve {
namespace {

struct Token {
  char kind;  // '[', ']' or 'n'
  BigInt value;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c == '[' || c == ']') {
      tokens.push_back({c, BigInt(0)});
      ++i;
      continue;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      const std::string word = text.substr(i, j - i);
      BigInt v;
      if (v.set_str(word, 10) != 0) {
        throw ParseError("malformed integer token '" + word + "'");
      }
      tokens.push_back({'n', std::move(v)});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' in basis");
  }
  return tokens;
}

IntMatrix parse_bracketed(const std::vector<Token>& tokens) {
  IntMatrix rows;
  std::size_t i = 0;
  const bool outer =
      tokens.size() >= 2 && tokens[0].kind == '[' && tokens[1].kind == '[';
  if (outer) ++i;
  while (i < tokens.size() && tokens[i].kind == '[') {
    ++i;
    std::vector<BigInt> row;
    while (i < tokens.size() && tokens[i].kind == 'n') {
      row.push_back(tokens[i].value);
      ++i;
    }
    if (i >= tokens.size() || tokens[i].kind != ']') {
      throw ParseError("unterminated basis row");
    }
    ++i;
    rows.push_back(std::move(row));
  }
  if (outer && i < tokens.size() && tokens[i].kind == ']') ++i;
  if (i != tokens.size()) throw ParseError("trailing tokens after basis");
  return rows;
}

IntMatrix parse_plain(const std::string& text) {
  IntMatrix rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string word;
    std::vector<BigInt> row;
    while (words >> word) {
      BigInt v;
      if (v.set_str(word, 10) != 0) {
        throw ParseError("malformed integer token '" + word + "'");
      }
      row.push_back(std::move(v));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

BasisMatrix parse_basis(const std::string& text) {
  IntMatrix rows;
  if (text.find('[') != std::string::npos) {
    rows = parse_bracketed(tokenize(text));
  } else {
    rows = parse_plain(text);
  }
  if (rows.empty()) throw ParseError("no rows found");
  const std::size_t width = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != width) throw ParseError("ragged basis rows");
  }
  return build_basis(std::move(rows));
}

std::string format_basis(const BasisMatrix& basis) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < basis.dim(); ++i) {
    out << '[';
    const auto& row = basis.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ' ';
      out << row[j];
    }
    out << "]\n";
  }
  out << "]\n";
  return out.str();
}

BasisMatrix generate_random_basis(int dim, int bits, std::uint64_t seed) {
  if (dim < 2) throw InvalidParamsError("dim must be >= 2");
  if (bits < 2) throw InvalidParamsError("bits must be >= 2");

  gmp_randstate_t state;
  gmp_randinit_mt(state);
  gmp_randseed_ui(state, static_cast<unsigned long>(seed));

  BigInt modulus;
  mpz_urandomb(modulus.get_mpz_t(), state, static_cast<mp_bitcnt_t>(bits - 1));
  modulus += BigInt(1) << (bits - 1);  // uniform in [2^(bits-1), 2^bits)

  IntMatrix rows(dim, std::vector<BigInt>(dim, BigInt(0)));
  rows[0][0] = modulus;
  for (int i = 1; i < dim; ++i) {
    mpz_urandomm(rows[i][0].get_mpz_t(), state, modulus.get_mpz_t());
    rows[i][i] = 1;
  }
  gmp_randclear(state);
  return build_basis(std::move(rows));
}

}  // namespace evosieve
