from .parameterargs import ParameterArgs, Family, PsiMode, FitMethod, Distribution, ReportFormat
from .filesystemreader import FileSystemReaderWriter
from .configuration import conf_info, conf_value, thread_cap
from .constants import HOME_PATH, CONFIG_FILE
from .log import Log
from .resultset import ResultSet
