# -*- coding: utf-8 -*-
"""
ZetaLab 빌드 스크립트

PyInstaller로 zetalab CLI를 단일 콘솔 실행 파일로 빌드합니다.
보고서 스키마(schemas/)와 예제 곡선(curves/)을 함께 번들합니다.

사용법:
python build.py [--debug] [--keep-temp]

옵션:
--debug     : PyInstaller 출력 표시
--keep-temp : build/ 디렉토리 유지
"""

import argparse
import os
import shutil
import subprocess
import sys
import time
from pathlib import Path
from typing import List


class BuildManager:
    """빌드 관리자"""

    BUNDLED_DIRS = ('schemas', 'curves')
    HIDDEN_IMPORTS = ('mpmath', 'sympy', 'jsonschema')

    def __init__(self, debug: bool = False, keep_temp: bool = False):
        self.debug = debug
        self.keep_temp = keep_temp

        self.root_dir = Path(__file__).parent.resolve()
        self.dist_dir = self.root_dir / 'dist'
        self.build_dir = self.root_dir / 'build'
        self.main_script = self.root_dir / 'main.py'
        self.output_name = 'zetalab'
        self.output_exe = self.dist_dir / (self.output_name + ('.exe' if os.name == 'nt' else ''))

        self.start_time = time.time()

    def log(self, message: str, level: str = "INFO"):
        timestamp = time.strftime("%H:%M:%S")
        print(f"[{timestamp}] [{level}] {message}")

    def check_requirements(self) -> bool:
        """빌드 요구사항 확인"""
        if sys.version_info < (3, 11):
            self.log(f"Python 3.11 이상이 필요합니다 (tomllib): {sys.version.split()[0]}", "ERROR")
            return False
        if not self.main_script.exists():
            self.log(f"main.py를 찾을 수 없습니다: {self.main_script}", "ERROR")
            return False
        for name in self.BUNDLED_DIRS:
            if not (self.root_dir / name).is_dir():
                self.log(f"번들 디렉토리가 없습니다: {name}", "ERROR")
                return False
        try:
            import PyInstaller  # noqa: F401
        except ImportError:
            self.log("PyInstaller가 설치되어 있지 않습니다: pip install -r requirements.txt", "ERROR")
            return False
        return True

    def clean_previous_builds(self) -> bool:
        try:
            for directory in (self.build_dir, self.dist_dir):
                if directory.exists():
                    shutil.rmtree(directory)
            self.log("이전 빌드 파일 정리 완료", "SUCCESS")
            return True
        except Exception as e:
            self.log(f"빌드 파일 정리 실패: {e}", "ERROR")
            return False

    def pyinstaller_command(self) -> List[str]:
        cmd = [sys.executable, '-m', 'PyInstaller', '--onefile', '--console', '--noconfirm',
               '--name', self.output_name]
        for name in self.BUNDLED_DIRS:
            cmd += ['--add-data', f"{self.root_dir / name}{os.pathsep}{name}"]
        for module in self.HIDDEN_IMPORTS:
            cmd += ['--hidden-import', module]
        cmd.append(str(self.main_script))
        return cmd

    def run_pyinstaller(self) -> bool:
        cmd = self.pyinstaller_command()
        self.log(f"실행 명령어: {' '.join(cmd)}")
        result = subprocess.run(cmd, cwd=self.root_dir, capture_output=True, text=True,
                                encoding='utf-8', errors='replace')
        if result.returncode == 0:
            self.log("PyInstaller 빌드 성공", "SUCCESS")
            if self.debug and result.stdout:
                print(result.stdout)
            return True
        self.log("PyInstaller 빌드 실패", "ERROR")
        print(result.stderr or result.stdout)
        return False

    def verify_build_result(self) -> bool:
        if not self.output_exe.exists():
            self.log(f"실행 파일을 찾을 수 없습니다: {self.output_exe}", "ERROR")
            return False
        size_mb = self.output_exe.stat().st_size / 1024 / 1024
        self.log(f"실행 파일 생성 확인: {self.output_exe} ({size_mb:.1f} MB)", "SUCCESS")
        return True

    def cleanup_temp_files(self):
        if self.keep_temp:
            self.log("임시 파일 유지 (--keep-temp 옵션)")
            return
        if self.build_dir.exists():
            shutil.rmtree(self.build_dir, ignore_errors=True)
        spec_file = self.root_dir / f"{self.output_name}.spec"
        if spec_file.exists():
            spec_file.unlink()

    def build(self) -> bool:
        """전체 빌드 프로세스 실행"""
        self.log(f"{self.output_name} 빌드 시작 ({sys.version.split()[0]}, {sys.platform})")
        steps = (
            ("요구사항 확인", self.check_requirements),
            ("이전 빌드 정리", self.clean_previous_builds),
            ("PyInstaller", self.run_pyinstaller),
            ("결과 확인", self.verify_build_result),
        )
        try:
            for label, step in steps:
                if not step():
                    self.log(f"단계 실패: {label}", "ERROR")
                    return False
        except KeyboardInterrupt:
            self.log("사용자에 의해 빌드가 중단되었습니다", "WARNING")
            return False

        self.cleanup_temp_files()
        elapsed = time.time() - self.start_time
        self.log(f"빌드 시간: {elapsed:.1f}s")
        self.log(f"실행 예: {self.output_exe} analyze --curve curves/elliptic_f2.toml")
        return True


def main():
    parser = argparse.ArgumentParser(description='ZetaLab 빌드 스크립트')
    parser.add_argument('--debug', action='store_true', help='PyInstaller 출력 표시')
    parser.add_argument('--keep-temp', action='store_true', help='임시 파일 유지 (디버깅용)')
    args = parser.parse_args()

    builder = BuildManager(debug=args.debug, keep_temp=args.keep_temp)
    return 0 if builder.build() else 1


if __name__ == "__main__":
    sys.exit(main())
