#include "exotic/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

#include "exotic/numeric.hpp"

namespace exotic {

SignedPermutation SignedPermutation::identity(int m) {
    if (m < 1) fail(ErrorKind::BadParameters, "need m >= 1");
    SignedPermutation w(m);
    std::iota(w.pi_.begin(), w.pi_.end(), 1);
    return w;
}

SignedPermutation SignedPermutation::generator(int m, int i) {
    if (i < 0 || i > m - 1)
        fail(ErrorKind::IndexOutOfRange,
             "s" + std::to_string(i) + " is not a generator of W_C" + std::to_string(m));
    SignedPermutation w = identity(m);
    if (i == 0) {
        w.eps_[0] = -1;
    } else {
        std::swap(w.pi_[static_cast<std::size_t>(i - 1)], w.pi_[static_cast<std::size_t>(i)]);
    }
    return w;
}

SignedPermutation SignedPermutation::fromWindow(const std::vector<int>& window) {
    const int m = static_cast<int>(window.size());
    if (m < 1) fail(ErrorKind::BadParameters, "empty window");
    SignedPermutation w(m);
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int i = 1; i <= m; ++i) {
        int value = window[static_cast<std::size_t>(i - 1)];
        int image = std::abs(value);
        if (image < 1 || image > m)
            fail(ErrorKind::IndexOutOfRange, "window value " + std::to_string(value) +
                                                 " is outside ±1..±" + std::to_string(m));
        if (seen[static_cast<std::size_t>(image)])
            fail(ErrorKind::IndexOutOfRange, "window repeats image " + std::to_string(image));
        seen[static_cast<std::size_t>(image)] = true;
        w.pi_[static_cast<std::size_t>(i - 1)] = image;
        w.eps_[static_cast<std::size_t>(i - 1)] = value < 0 ? -1 : 1;
    }
    return w;
}

SignedPermutation SignedPermutation::parse(int m, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string token; in >> token;) tokens.push_back(token);

    bool generatorWord = !tokens.empty() && (tokens.front()[0] == 's' || tokens.front()[0] == 'S');
    if (tokens.empty() || (tokens.size() == 1 && (tokens[0] == "e" || tokens[0] == "id")))
        return identity(m);

    if (generatorWord) {
        SignedPermutation w = identity(m);
        for (const std::string& token : tokens) {
            if (token.size() < 2 || (token[0] != 's' && token[0] != 'S'))
                fail(ErrorKind::ParseError, "bad generator token '" + token + "'");
            int index;
            try {
                index = std::stoi(token.substr(1));
            } catch (const std::exception&) {
                fail(ErrorKind::ParseError, "bad generator token '" + token + "'");
            }
            w = w * generator(m, index);
        }
        return w;
    }

    std::vector<int> window;
    for (const std::string& token : tokens) {
        try {
            window.push_back(std::stoi(token));
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "bad window entry '" + token + "'");
        }
    }
    if (static_cast<int>(window.size()) != m)
        fail(ErrorKind::SizeMismatch, "window has " + std::to_string(window.size()) +
                                          " entries, expected " + std::to_string(m));
    return fromWindow(window);
}

int SignedPermutation::imageOf(int i) const {
    if (i < 1 || i > m_)
        fail(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " is outside 1.." + std::to_string(m_));
    return pi_[static_cast<std::size_t>(i - 1)];
}

int SignedPermutation::signAt(int i) const {
    if (i < 1 || i > m_)
        fail(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " is outside 1.." + std::to_string(m_));
    return eps_[static_cast<std::size_t>(i - 1)];
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& other) const {
    if (m_ != other.m_)
        fail(ErrorKind::SizeMismatch, "cannot compose elements of W_C" + std::to_string(m_) +
                                          " and W_C" + std::to_string(other.m_));
    SignedPermutation result(m_);
    for (int i = 1; i <= m_; ++i) {
        int mid = other.pi_[static_cast<std::size_t>(i - 1)];
        result.pi_[static_cast<std::size_t>(i - 1)] = pi_[static_cast<std::size_t>(mid - 1)];
        result.eps_[static_cast<std::size_t>(i - 1)] = static_cast<std::int8_t>(
            other.eps_[static_cast<std::size_t>(i - 1)] * eps_[static_cast<std::size_t>(mid - 1)]);
    }
    return result;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation result(m_);
    for (int i = 1; i <= m_; ++i) {
        int image = pi_[static_cast<std::size_t>(i - 1)];
        result.pi_[static_cast<std::size_t>(image - 1)] = i;
        result.eps_[static_cast<std::size_t>(image - 1)] = eps_[static_cast<std::size_t>(i - 1)];
    }
    return result;
}

std::vector<int> SignedPermutation::window() const {
    std::vector<int> values(static_cast<std::size_t>(m_));
    for (int i = 1; i <= m_; ++i)
        values[static_cast<std::size_t>(i - 1)] =
            pi_[static_cast<std::size_t>(i - 1)] * eps_[static_cast<std::size_t>(i - 1)];
    return values;
}

std::string SignedPermutation::windowText() const {
    std::ostringstream os;
    std::vector<int> values = window();
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) {
    return os << w.windowText();
}

MonomialImage actOnMonomial(const SignedPermutation& w, const std::vector<int>& indices) {
    MonomialImage image;
    image.indices.reserve(indices.size());
    for (int i : indices) {
        image.sign *= w.signAt(i);
        image.indices.push_back(w.imageOf(i));
    }
    std::sort(image.indices.begin(), image.indices.end());
    return image;
}

long long characterValue(int m, int k, int l, const SignedPermutation& w) {
    if (k < 0 || k > m || l < 0 || l > m - k)
        fail(ErrorKind::BadParameters, "need 0 <= k <= m and 0 <= l <= m-k");
    if (w.size() != m)
        fail(ErrorKind::SizeMismatch, "group element lives in W_C" + std::to_string(w.size()));
    long long trace = 0;
    forEachSubset(m, l, [&](const std::vector<int>& indices) {
        MonomialImage image = actOnMonomial(w, indices);
        if (image.indices == indices) trace += image.sign;
    });
    return trace;
}

mpz_class hyperoctahedralOrder(int m) {
    mpz_class order;
    mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_mul_2exp(order.get_mpz_t(), order.get_mpz_t(), static_cast<unsigned long>(m));
    return order;
}

int bruteForceBound() {
    if (const char* env = std::getenv("EXOTIC_BRUTE_BOUND")) {
        int bound = std::atoi(env);
        if (bound >= 1) return bound;
    }
    return 7;
}

void forEachGroupElement(int m, const std::function<void(const SignedPermutation&)>& visit) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (long mask = 0; mask < (1L << m); ++mask) {
            std::vector<int> window(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                window[static_cast<std::size_t>(i)] =
                    (mask & (1L << i)) ? -perm[static_cast<std::size_t>(i)] : perm[static_cast<std::size_t>(i)];
            visit(SignedPermutation::fromWindow(window));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<std::vector<mpq_class>> innerProductMatrix(int m, int lMax) {
    if (m < 1 || lMax < 0 || lMax > m)
        fail(ErrorKind::BadParameters, "need m >= 1 and 0 <= lMax <= m");
    if (m > bruteForceBound())
        fail(ErrorKind::GroupTooLarge, "m=" + std::to_string(m) + " exceeds the brute-force bound " +
                                           std::to_string(bruteForceBound()) +
                                           " (set EXOTIC_BRUTE_BOUND to raise it)");

    std::vector<std::vector<mpz_class>> sums(static_cast<std::size_t>(lMax) + 1,
                                             std::vector<mpz_class>(static_cast<std::size_t>(lMax) + 1, 0));
    std::vector<long long> chi(static_cast<std::size_t>(lMax) + 1, 0);

    forEachGroupElement(m, [&](const SignedPermutation& w) {
        std::fill(chi.begin(), chi.end(), 0);
        // one sweep over all index subsets collects every character at once
        for (long subset = 0; subset < (1L << m); ++subset) {
            int size = 0;
            long image = 0;
            int sign = 1;
            for (int i = 1; i <= m; ++i) {
                if (subset & (1L << (i - 1))) {
                    ++size;
                    image |= 1L << (w.imageOf(i) - 1);
                    sign *= w.signAt(i);
                }
            }
            if (size <= lMax && image == subset) chi[static_cast<std::size_t>(size)] += sign;
        }
        for (int l = 0; l <= lMax; ++l)
            for (int lp = l; lp <= lMax; ++lp)
                sums[static_cast<std::size_t>(l)][static_cast<std::size_t>(lp)] +=
                    mpz_class(chi[static_cast<std::size_t>(l)]) * chi[static_cast<std::size_t>(lp)];
    });

    mpz_class order = hyperoctahedralOrder(m);
    std::vector<std::vector<mpq_class>> result(static_cast<std::size_t>(lMax) + 1,
                                               std::vector<mpq_class>(static_cast<std::size_t>(lMax) + 1));
    for (int l = 0; l <= lMax; ++l) {
        for (int lp = 0; lp <= lMax; ++lp) {
            const mpz_class& sum = (l <= lp) ? sums[static_cast<std::size_t>(l)][static_cast<std::size_t>(lp)]
                                             : sums[static_cast<std::size_t>(lp)][static_cast<std::size_t>(l)];
            mpq_class value(sum, order);
            value.canonicalize();
            result[static_cast<std::size_t>(l)][static_cast<std::size_t>(lp)] = value;
        }
    }
    return result;
}

mpq_class innerProduct(int m, int k, int l, int lPrime) {
    if (k < 0 || k > m || l < 0 || l > m - k || lPrime < 0 || lPrime > m - k)
        fail(ErrorKind::BadParameters, "need 0 <= k <= m and degrees within 0..m-k");
    int lMax = std::max(l, lPrime);
    return innerProductMatrix(m, lMax)[static_cast<std::size_t>(l)][static_cast<std::size_t>(lPrime)];
}

namespace {

// Apply a word of generators to a monomial, leftmost factor acting last.
MonomialImage applyWord(int m, const std::vector<int>& word, const std::vector<int>& indices) {
    MonomialImage image{1, indices};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        MonomialImage next = actOnMonomial(SignedPermutation::generator(m, *it), image.indices);
        image.sign *= next.sign;
        image.indices = std::move(next.indices);
    }
    return image;
}

std::string wordText(const std::vector<int>& word) {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << "s" << word[i];
    return os.str();
}

} // namespace

bool verifyGeneratorRelations(int m, std::string* report) {
    if (m < 1) fail(ErrorKind::BadParameters, "need m >= 1");

    std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
    for (int i = 0; i <= m - 1; ++i) relations.push_back({{i, i}, {}});
    for (int i = 1; i <= m - 1; ++i) {
        for (int j = i + 1; j <= m - 1; ++j) {
            if (j - i > 1) relations.push_back({{i, j}, {j, i}});
            else relations.push_back({{i, j, i}, {j, i, j}});
        }
    }
    if (m >= 2) relations.push_back({{0, 1, 0, 1}, {1, 0, 1, 0}});
    for (int j = 2; j <= m - 1; ++j) relations.push_back({{0, j}, {j, 0}});

    auto compose = [&](const std::vector<int>& word) {
        SignedPermutation w = SignedPermutation::identity(m);
        for (int i : word) w = w * SignedPermutation::generator(m, i);
        return w;
    };

    for (const auto& [lhs, rhs] : relations) {
        if (!(compose(lhs) == compose(rhs))) {
            if (report)
                *report = "group relation fails: " + wordText(lhs) + " != " + wordText(rhs);
            return false;
        }
        // operator equality, entrywise on each monomial basis
        for (int l = 0; l <= m; ++l) {
            bool ok = true;
            forEachSubset(m, l, [&](const std::vector<int>& indices) {
                if (!ok) return;
                if (!(applyWord(m, lhs, indices) == applyWord(m, rhs, indices))) ok = false;
            });
            if (!ok) {
                if (report)
                    *report = "operator relation fails in degree " + std::to_string(2 * l) + ": " +
                              wordText(lhs) + " != " + wordText(rhs);
                return false;
            }
        }
    }
    if (report) report->clear();
    return true;
}

} // namespace exotic
