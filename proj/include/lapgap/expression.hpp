/**
 * Constructor expressions:
 *
 *     expr := skeleton(m,k) | simplex(m) | Z(d,t,r) | join(expr, expr)
 *           | clique(<edge list path>) | file(<facet file path>)
 *
 * Whitespace between tokens is ignored. Paths run to the matching ')'.
 */

#ifndef LAPGAP_EXPRESSION_HPP
#define LAPGAP_EXPRESSION_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "extremal.hpp"
#include "facet_io.hpp"

namespace lapgap {

class ParseError : public InputError
{
    public:
        ParseError(const std::string& what, std::size_t position)
            : InputError("parse error at position " + std::to_string(position) + ": " + what),
              position_(position)
        {}

        std::size_t position() const { return position_; }

    private:
        std::size_t position_;
};

namespace detail {

class ExpressionParser
{
    public:
        explicit ExpressionParser(std::string_view text) : text_(text) {}

        SimplicialComplex parse()
        {
            SimplicialComplex x = expression();
            skip_space();
            if (pos_ != text_.size())
                throw ParseError("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'", pos_);
            return x;
        }

    private:
        std::string_view text_;
        std::size_t pos_ = 0;

        void skip_space()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }

        void expect(char c)
        {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != c)
                throw ParseError(std::string("expected '") + c + "'", pos_);
            ++pos_;
        }

        std::string identifier()
        {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            if (start == pos_)
                throw ParseError("expected a constructor name", start);
            return std::string(text_.substr(start, pos_ - start));
        }

        int integer()
        {
            skip_space();
            std::size_t start = pos_;
            if (pos_ < text_.size() && text_[pos_] == '-')
                ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string tok(text_.substr(start, pos_ - start));
            if (tok.empty() || tok == "-" || tok.size() > 9)
                throw ParseError("expected an integer", start);
            return std::stoi(tok);
        }

        std::vector<int> integers(std::size_t count)
        {
            std::vector<int> out;
            expect('(');
            for (std::size_t i = 0; i < count; ++i)
            {
                if (i)
                    expect(',');
                out.push_back(integer());
            }
            expect(')');
            return out;
        }

        std::string path()
        {
            expect('(');
            std::size_t start = pos_;
            int depth = 0;
            while (pos_ < text_.size() && !(text_[pos_] == ')' && depth == 0))
            {
                if (text_[pos_] == '(')
                    ++depth;
                else if (text_[pos_] == ')')
                    --depth;
                ++pos_;
            }
            if (pos_ >= text_.size())
                throw ParseError("unterminated path", start);
            std::string p(text_.substr(start, pos_ - start));
            ++pos_;
            auto first = p.find_first_not_of(" \t");
            auto last = p.find_last_not_of(" \t");
            if (first == std::string::npos)
                throw ParseError("empty path", start);
            return p.substr(first, last - first + 1);
        }

        SimplicialComplex expression()
        {
            skip_space();
            const std::size_t at = pos_;
            const std::string name = identifier();
            if (name == "skeleton")
            {
                auto a = integers(2);
                return skeleton(a[0], a[1]);
            }
            if (name == "simplex")
            {
                auto a = integers(1);
                return simplex(a[0]);
            }
            if (name == "Z")
            {
                auto a = integers(3);
                return build_Z(a[0], a[1], a[2]);
            }
            if (name == "join")
            {
                expect('(');
                SimplicialComplex left = expression();
                expect(',');
                SimplicialComplex right = expression();
                expect(')');
                return join(left, right);
            }
            if (name == "clique")
                return read_edge_list_file(path());
            if (name == "file")
                return read_facet_file(path());
            throw ParseError("unknown constructor '" + name + "'", at);
        }
};

}   // namespace detail

inline SimplicialComplex parse_constructor(std::string_view expr)
{
    return detail::ExpressionParser(expr).parse();
}

}   // namespace lapgap

#endif
