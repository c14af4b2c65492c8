#pragma once

namespace bsw {
int run(int argc, char** argv);
}
