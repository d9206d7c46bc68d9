#include "buckyforge/analysis.hpp"
