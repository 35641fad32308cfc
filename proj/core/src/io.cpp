#include "exacthh/io.hpp"
