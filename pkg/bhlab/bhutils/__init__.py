from .utils import ParameterArgs, FileSystemReaderWriter, conf_info, conf_value
from .utils import Log, ResultSet
from .utils.exceptions import wrap_exceptions
