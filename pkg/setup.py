import setuptools

from pqe_tools import __version__

setuptools.setup(
    name="pqe-tools",
    version=__version__,
    description="Exact probabilistic query evaluation and hardness reductions on tuple-independent graph databases.",
    long_description="Exact probabilistic query evaluation and hardness reductions on tuple-independent graph databases.",
    packages=setuptools.find_packages(include=['pqe_tools', 'pqe_tools.*']),
    include_package_data=True,
    zip_safe=False,
    python_requires='>=3.6',
    install_requires=['click>=7', 'networkx'],
    entry_points={
        "console_scripts": [
            'pqe=pqe_tools.cli.main:main',
        ]
    }
)
