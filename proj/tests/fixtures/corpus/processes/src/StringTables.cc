#include <cstring>
#include <string>

// Strings that look like comments or keywords must stay opaque.
const char* kUrl = "http://example.org/physics//lists";
const char* kBlock = "/* not a comment */";
const char* kKeyword = "if(x) while(y) for(;;) case 1:";
const char* kEscaped = "quote \" then // still string";
const char* kRaw = R"delim(raw // text
/* spans */ if (x) { }
)delim";

/* A comment with "quotes" and 'apostrophes' and // slashes */

std::size_t TotalLength()
{
  return std::strlen(kUrl) + std::strlen(kBlock) // url and block
       + std::strlen(kKeyword)
       + std::strlen(kEscaped) + std::strlen(kRaw);
}

std::string Join(const std::string& a, const std::string& b)
{
  return a + "//" + b;
}
