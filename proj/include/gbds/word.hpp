#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace gbds {

  //! A finite word over an alphabet, as letter indices. The empty word is the
  //! identity for concatenation.
  using Word = std::vector<int>;

  inline Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  //! True if \p p is a prefix of \p w.
  inline bool is_prefix(Word const& p, Word const& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  }

  inline Word suffix_after(Word const& w, std::size_t n) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
  }

  //! Letters are joined directly when every name is a single character and
  //! with '.' otherwise.
  inline std::string format_word(Word const&                     w,
                                 std::vector<std::string> const& names,
                                 std::string const&              empty = "ω") {
    if (w.empty()) {
      return empty;
    }
    bool short_names = true;
    for (int l : w) {
      if (names[static_cast<std::size_t>(l)].size() != 1) {
        short_names = false;
      }
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && !short_names) {
        out += '.';
      }
      out += names[static_cast<std::size_t>(w[i])];
    }
    return out;
  }

  //! Reduced word in the free group on the alphabet; letter i is stored as
  //! i + 1 and its inverse as -(i + 1).
  class FreeGroupWord {
   public:
    FreeGroupWord() = default;

    static FreeGroupWord positive(Word const& w) {
      FreeGroupWord g;
      for (int l : w) {
        g.push(l + 1);
      }
      return g;
    }

    //! \p w read as an inverse, i.e. (w)^-1.
    static FreeGroupWord inverse_of(Word const& w) {
      FreeGroupWord g;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        g.push(-(*it + 1));
      }
      return g;
    }

    //! Parses signed letters, for example {1, -2} is a b^-1.
    static FreeGroupWord from_signed(std::vector<int> const& letters) {
      FreeGroupWord g;
      for (int l : letters) {
        g.push(l);
      }
      return g;
    }

    friend FreeGroupWord operator*(FreeGroupWord a, FreeGroupWord const& b) {
      for (int l : b._letters) {
        a.push(l);
      }
      return a;
    }

    FreeGroupWord inverse() const {
      FreeGroupWord g;
      for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
        g.push(-*it);
      }
      return g;
    }

    bool is_identity() const noexcept {
      return _letters.empty();
    }
    std::vector<int> const& letters() const noexcept {
      return _letters;
    }

    //! If this word is p1 p2^-1 with p1, p2 positive, returns true and fills
    //! both; the split is unique for a reduced word.
    bool split(Word& p1, Word& p2) const {
      p1.clear();
      p2.clear();
      std::size_t i = 0;
      while (i < _letters.size() && _letters[i] > 0) {
        p1.push_back(_letters[i] - 1);
        ++i;
      }
      for (std::size_t j = _letters.size(); j > i; --j) {
        if (_letters[j - 1] > 0) {
          return false;
        }
        p2.push_back(-_letters[j - 1] - 1);
      }
      return true;
    }

    std::string format(std::vector<std::string> const& names) const {
      if (_letters.empty()) {
        return "e";
      }
      std::string out;
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        int l = _letters[i];
        out += names[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
        if (l < 0) {
          out += "^-1";
        }
      }
      return out;
    }

    friend bool operator==(FreeGroupWord const&, FreeGroupWord const&) = default;

   private:
    void push(int l) {
      if (!_letters.empty() && _letters.back() == -l) {
        _letters.pop_back();
      } else {
        _letters.push_back(l);
      }
    }

    std::vector<int> _letters;
  };

}  // namespace gbds
