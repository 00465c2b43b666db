from .exceptions import *
from .config import *
from .numkernel import *
from .polyhedra import *
from .matroids import *
from .prevariety import *
from .troplin import *
from .fano import *
from .toriclib import *
from .jsonio import *
