#include "rlat/text_format.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace rlat {

  namespace {
    struct Line {
      std::size_t              number = 0;
      std::vector<std::string> words;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        if (auto h = raw.find('#'); h != std::string_view::npos) {
          raw = raw.substr(0, h);
        }
        std::istringstream in{std::string(raw)};
        Line               line{number, {}};
        for (std::string w; in >> w;) {
          line.words.push_back(w);
        }
        if (!line.words.empty()) {
          out.push_back(std::move(line));
        }
        pos = end + 1;
      }
      return out;
    }

    [[noreturn]] void syntax(std::size_t line, std::string const& msg) {
      fail(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + msg);
    }

    bool is_keyword(std::string const& w) {
      static std::vector<std::string> const kw{"algebra", "lattice", "elements", "unit",
                                               "fconst",  "order",   "mult",     "lres",
                                               "rres",    "end"};
      return std::find(kw.begin(), kw.end(), w) != kw.end();
    }

    struct Block {
      std::string                              header;
      std::string                              name;
      std::size_t                              line = 0;
      std::optional<std::vector<std::string>>  elements;
      std::optional<std::string>               unit;
      std::optional<std::string>               fconst;
      std::optional<std::vector<Line>>         order;
      std::optional<std::vector<Line>>         mult, lres, rres;
    };

    std::vector<Block> parse_blocks(std::string_view text) {
      auto const         lines = tokenize(text);
      std::vector<Block> blocks;
      std::size_t        i = 0;
      while (i < lines.size()) {
        auto const& head = lines[i];
        if (head.words[0] != "algebra" && head.words[0] != "lattice") {
          syntax(head.number, "expected 'algebra' or 'lattice', got '" + head.words[0] + "'");
        }
        if (head.words.size() != 2) {
          syntax(head.number, "expected '" + head.words[0] + " NAME'");
        }
        Block b;
        b.header = head.words[0];
        b.name   = head.words[1];
        b.line   = head.number;
        ++i;
        bool closed = false;
        while (i < lines.size() && !closed) {
          auto const& l  = lines[i];
          auto const& kw = l.words[0];
          auto dup       = [&](bool present) {
            if (present) {
              fail(ErrorKind::DuplicateBlock,
                   "line " + std::to_string(l.number) + ": second '" + kw + "' block");
            }
          };
          auto body = [&]() {
            std::vector<Line> rows;
            if (l.words.size() != 1) {
              syntax(l.number, "'" + kw + "' takes no arguments");
            }
            ++i;
            while (i < lines.size() && !is_keyword(lines[i].words[0])) {
              rows.push_back(lines[i++]);
            }
            return rows;
          };
          if (kw == "end") {
            closed = true;
            ++i;
          } else if (kw == "elements") {
            dup(b.elements.has_value());
            b.elements = std::vector<std::string>(l.words.begin() + 1, l.words.end());
            for (auto const& w : *b.elements) {
              if (is_keyword(w)) {
                syntax(l.number, "'" + w + "' is reserved and cannot label an element");
              }
            }
            ++i;
          } else if (kw == "unit" || kw == "fconst") {
            auto& slot = kw == "unit" ? b.unit : b.fconst;
            dup(slot.has_value());
            if (l.words.size() != 2) {
              syntax(l.number, "expected '" + kw + " LABEL'");
            }
            slot = l.words[1];
            ++i;
          } else if (kw == "order") {
            dup(b.order.has_value());
            b.order = body();
          } else if (kw == "mult") {
            dup(b.mult.has_value());
            b.mult = body();
          } else if (kw == "lres") {
            dup(b.lres.has_value());
            b.lres = body();
          } else if (kw == "rres") {
            dup(b.rres.has_value());
            b.rres = body();
          } else {
            syntax(l.number, "unexpected '" + kw + "'");
          }
        }
        if (!closed) {
          syntax(lines.back().number, "missing 'end'");
        }
        blocks.push_back(std::move(b));
      }
      return blocks;
    }

    Elem lookup(std::vector<std::string> const& labels, std::string const& s, std::size_t line) {
      auto it = std::find(labels.begin(), labels.end(), s);
      if (it == labels.end()) {
        fail(ErrorKind::UnknownLabel,
             "line " + std::to_string(line) + ": unknown element '" + s + "'");
      }
      return static_cast<Elem>(it - labels.begin());
    }

    std::vector<std::uint8_t> order_of(Block const& b, std::vector<std::string> const& labels) {
      std::vector<std::pair<Elem, Elem>> pairs;
      if (b.order) {
        for (auto const& l : *b.order) {
          if (l.words.size() != 2) {
            syntax(l.number, "order lines are 'LO HI'");
          }
          pairs.emplace_back(lookup(labels, l.words[0], l.number),
                             lookup(labels, l.words[1], l.number));
        }
      }
      return order_closure(labels.size(), pairs);
    }

    std::vector<Elem> table_of(std::vector<Line> const&        rows,
                               std::vector<std::string> const& labels,
                               std::size_t                     fallback_line) {
      std::size_t const n = labels.size();
      if (rows.size() != n) {
        syntax(rows.empty() ? fallback_line : rows.back().number,
               "expected " + std::to_string(n) + " rows");
      }
      std::vector<Elem> t;
      for (auto const& r : rows) {
        if (r.words.size() != n) {
          syntax(r.number, "expected " + std::to_string(n) + " entries");
        }
        for (auto const& w : r.words) {
          t.push_back(lookup(labels, w, r.number));
        }
      }
      return t;
    }

    std::vector<std::string> const& elements_of(Block const& b) {
      if (!b.elements) {
        syntax(b.line, "'" + b.name + "' has no 'elements' line");
      }
      if (b.elements->empty()) {
        syntax(b.line, "'" + b.name + "' has no elements");
      }
      return *b.elements;
    }

    FiniteResiduatedLattice build(Block const& b) {
      if (b.header != "algebra") {
        syntax(b.line, "expected an algebra, got a lattice");
      }
      auto const& labels = elements_of(b);
      if (!b.unit) {
        syntax(b.line, "'" + b.name + "' has no 'unit' line");
      }
      if (!b.mult) {
        syntax(b.line, "'" + b.name + "' has no 'mult' block");
      }
      RawAlgebra raw;
      raw.name   = b.name;
      raw.labels = labels;
      raw.leq    = order_of(b, labels);
      raw.mult   = table_of(*b.mult, labels, b.line);
      raw.unit   = lookup(labels, *b.unit, b.line);
      if (b.fconst) {
        raw.f_const = lookup(labels, *b.fconst, b.line);
      }
      if (b.lres) {
        raw.lres = table_of(*b.lres, labels, b.line);
      }
      if (b.rres) {
        raw.rres = table_of(*b.rres, labels, b.line);
      }
      return validate_algebra(std::move(raw));
    }

    void write_table(std::ostringstream& out,
                     FiniteResiduatedLattice const& alg,
                     Elem (FiniteResiduatedLattice::*op)(Elem, Elem) const) {
      std::size_t width = 0;
      for (auto const& l : alg.labels()) {
        width = std::max(width, l.size());
      }
      for (std::size_t x = 0; x < alg.size(); ++x) {
        for (std::size_t y = 0; y < alg.size(); ++y) {
          std::string const& s = alg.label((alg.*op)(static_cast<Elem>(x), static_cast<Elem>(y)));
          out << (y == 0 ? "  " : " ") << s;
          if (y + 1 < alg.size()) {
            out << std::string(width - s.size(), ' ');
          }
        }
        out << '\n';
      }
    }
  }  // namespace

  std::vector<FiniteResiduatedLattice> parse_algebras(std::string_view text) {
    std::vector<FiniteResiduatedLattice> out;
    for (auto const& b : parse_blocks(text)) {
      out.push_back(build(b));
    }
    return out;
  }

  FiniteResiduatedLattice parse_algebra(std::string_view text) {
    auto all = parse_algebras(text);
    if (all.size() != 1) {
      syntax(1, "expected exactly one algebra, found " + std::to_string(all.size()));
    }
    return std::move(all.front());
  }

  std::string write_algebra(FiniteResiduatedLattice const& alg, bool residuals) {
    std::ostringstream out;
    out << "algebra " << alg.name() << '\n';
    out << "elements";
    for (auto const& l : alg.labels()) {
      out << ' ' << l;
    }
    out << "\nunit " << alg.label(alg.unit()) << '\n';
    if (alg.f_const()) {
      out << "fconst " << alg.label(*alg.f_const()) << '\n';
    }
    out << "order\n";
    for (auto [lo, hi] : alg.lattice().cover_pairs()) {
      out << "  " << alg.label(lo) << ' ' << alg.label(hi) << '\n';
    }
    out << "mult\n";
    write_table(out, alg, &FiniteResiduatedLattice::mult);
    if (residuals) {
      out << "lres\n";
      write_table(out, alg, &FiniteResiduatedLattice::lres);
      out << "rres\n";
      write_table(out, alg, &FiniteResiduatedLattice::rres);
    }
    out << "end\n";
    return out.str();
  }

  LabeledLattice parse_lattice(std::string_view text) {
    auto blocks = parse_blocks(text);
    if (blocks.size() != 1 || blocks[0].header != "lattice") {
      syntax(blocks.empty() ? 1 : blocks[0].line, "expected exactly one lattice");
    }
    Block const& b = blocks[0];
    if (b.unit || b.mult || b.lres || b.rres || b.fconst) {
      syntax(b.line, "a lattice has only 'elements' and 'order'");
    }
    LabeledLattice lat;
    lat.name    = b.name;
    lat.labels  = elements_of(b);
    lat.lattice = FiniteLattice::from_order(lat.labels.size(), order_of(b, lat.labels));
    return lat;
  }

  std::string write_lattice(LabeledLattice const& lat) {
    std::ostringstream out;
    out << "lattice " << lat.name << "\nelements";
    for (auto const& l : lat.labels) {
      out << ' ' << l;
    }
    out << "\norder\n";
    for (auto [lo, hi] : lat.lattice.cover_pairs()) {
      out << "  " << lat.labels[lo] << ' ' << lat.labels[hi] << '\n';
    }
    out << "end\n";
    return out.str();
  }

}  // namespace rlat
