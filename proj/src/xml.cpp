#include "soire/xml.hpp"

#include <cctype>
#include <cstring>
#include <istream>
#include <vector>

namespace soire {

namespace {

// Minimal pull scanner for well-formed XML: emits open/close element events,
// skips everything else. Reads through a fixed buffer; no DOM.
class XmlScanner {
 public:
  explicit XmlScanner(std::istream& in) : in_(in) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw XmlError(what, line_, col_);
  }

  int peek() {
    if (pos_ == end_ && !fill()) return -1;
    return static_cast<unsigned char>(buf_[pos_]);
  }

  int get() {
    int c = peek();
    if (c < 0) return -1;
    ++pos_;
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void expect(char c, const char* what) {
    if (get() != c) fail(std::string("expected ") + what);
  }

  bool consume_if(std::string_view text) {
    // Only used after '<', where text is short; buffer refills keep this safe.
    ensure(text.size());
    if (end_ - pos_ < text.size()) return false;
    if (std::string_view(buf_ + pos_, text.size()) != text) return false;
    for (std::size_t i = 0; i < text.size(); ++i) get();
    return true;
  }

  void skip_until(std::string_view marker, const char* what) {
    std::string window;
    for (;;) {
      int c = get();
      if (c < 0) fail(std::string("unterminated ") + what);
      window += static_cast<char>(c);
      if (window.size() > marker.size()) window.erase(0, 1);
      if (window == marker) return;
    }
  }

 private:
  bool fill() {
    if (!in_.good()) return false;
    std::size_t keep = end_ - pos_;
    if (keep) std::memmove(buf_, buf_ + pos_, keep);
    pos_ = 0;
    end_ = keep;
    in_.read(buf_ + end_, static_cast<std::streamsize>(sizeof buf_ - end_));
    end_ += static_cast<std::size_t>(in_.gcount());
    return end_ > pos_;
  }

  void ensure(std::size_t n) {
    if (end_ - pos_ >= n) return;
    fill();
  }

  std::istream& in_;
  char buf_[1 << 16];
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool name_start(int c) {
  return c == '_' || c == ':' || std::isalpha(c) || c >= 0x80;
}

bool name_char(int c) {
  return name_start(c) || c == '-' || c == '.' || std::isdigit(c);
}

std::string read_name(XmlScanner& s) {
  std::string name;
  int c = s.peek();
  if (c < 0 || !name_start(c)) s.fail("expected element name");
  while (c >= 0 && name_char(c)) {
    name += static_cast<char>(s.get());
    c = s.peek();
  }
  return name;
}

void skip_doctype(XmlScanner& s) {
  int depth = 0;
  for (;;) {
    int c = s.get();
    if (c < 0) s.fail("unterminated DOCTYPE");
    if (c == '[') ++depth;
    else if (c == ']') --depth;
    else if (c == '>' && depth == 0) return;
  }
}

// Skips attributes and returns true for a self-closing tag.
bool finish_open_tag(XmlScanner& s) {
  bool in_quote = false;
  char quote = 0;
  for (;;) {
    int c = s.get();
    if (c < 0) s.fail("unterminated start tag");
    if (in_quote) {
      if (static_cast<char>(c) == quote) in_quote = false;
      continue;
    }
    if (c == '"' || c == '\'') {
      in_quote = true;
      quote = static_cast<char>(c);
    } else if (c == '/') {
      s.expect('>', "'>' after '/'");
      return true;
    } else if (c == '>') {
      return false;
    }
  }
}

}  // namespace

SampleSet extract_samples(std::istream& in, std::string_view element,
                          std::shared_ptr<Alphabet> alphabet) {
  SampleSet out(alphabet ? std::move(alphabet) : std::make_shared<Alphabet>());
  XmlScanner s(in);

  std::vector<std::string> open;  // names of currently open elements
  struct Frame {
    std::size_t depth;  // open.size() right after the target opened
    Word word;
  };
  std::vector<Frame> recording;

  auto handle_open = [&](const std::string& name) {
    if (!recording.empty() && recording.back().depth == open.size()) {
      recording.back().word.push_back(out.alphabet().intern(name));
    }
    open.push_back(name);
    if (name == element) recording.push_back({open.size(), {}});
  };

  auto handle_close = [&](const std::string& name) {
    if (open.empty() || open.back() != name) {
      s.fail("mismatched closing tag </" + name + ">");
    }
    if (!recording.empty() && recording.back().depth == open.size() &&
        name == element) {
      out.add(std::move(recording.back().word));
      recording.pop_back();
    }
    open.pop_back();
  };

  for (;;) {
    int c = s.get();
    if (c < 0) break;
    if (c != '<') continue;  // text content
    int next = s.peek();
    if (next < 0) s.fail("dangling '<' at end of input");
    if (next == '/') {
      s.get();
      std::string name = read_name(s);
      while (s.peek() >= 0 && std::isspace(s.peek())) s.get();
      s.expect('>', "'>' in closing tag");
      handle_close(name);
    } else if (next == '?') {
      s.get();
      s.skip_until("?>", "processing instruction");
    } else if (next == '!') {
      s.get();
      if (s.consume_if("--")) {
        s.skip_until("-->", "comment");
      } else if (s.consume_if("[CDATA[")) {
        s.skip_until("]]>", "CDATA section");
      } else {
        skip_doctype(s);
      }
    } else {
      std::string name = read_name(s);
      bool self_closing = finish_open_tag(s);
      handle_open(name);
      if (self_closing) handle_close(name);
    }
  }
  if (!open.empty()) {
    s.fail("unexpected end of input inside <" + open.back() + ">");
  }
  return out;
}

}  // namespace soire
