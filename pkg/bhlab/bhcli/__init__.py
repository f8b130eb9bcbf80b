from .main import run_cli, dispatch, build_parser, main
from .reports import write_report, render_report, render_profile_csv
